#include "transfinitum/surreal.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <unordered_map>

namespace transfinitum {

namespace {

std::atomic<std::uint64_t> g_step_budget{default_step_budget};

// Steps spent by the current top-level call on this thread.
thread_local std::uint64_t t_steps = 0;
thread_local int t_depth = 0;

class StepScope {
 public:
  StepScope() {
    if (t_depth++ == 0) t_steps = 0;
  }
  ~StepScope() { --t_depth; }
  StepScope(const StepScope&) = delete;
  StepScope& operator=(const StepScope&) = delete;
};

void spend(std::uint64_t steps) {
  t_steps += steps;
  if (t_steps > g_step_budget.load(std::memory_order_relaxed)) throw StepBudgetExceeded();
}

// ---------------------------------------------------------------------------
// Finite engine: sign expansions of finite birthday as strings of '+'/'-'.

namespace fin {

int cmp(const std::string& a, const std::string& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return a[i] == '+' ? 1 : -1;
  if (a.size() > n) return a[n] == '+' ? 1 : -1;
  if (b.size() > n) return b[n] == '+' ? -1 : 1;
  return 0;
}

// Shortest t with t < s (sign is '-') or t > s (sign is '+').
std::string shortest_beyond(std::string_view s, char sign) {
  std::size_t m = 0;
  while (m < s.size() && s[m] == sign) ++m;
  return std::string(m == s.size() ? m + 1 : m, sign);
}

std::string simplest(const std::string* lo, const std::string* hi) {
  std::string out;
  if (!lo && !hi) {
  } else if (!lo) {
    out = shortest_beyond(*hi, '-');
  } else if (!hi) {
    out = shortest_beyond(*lo, '+');
  } else {
    const std::string& l = *lo;
    const std::string& r = *hi;
    if (cmp(l, r) >= 0) throw OverlappingCut();
    std::size_t c = 0;
    while (c < l.size() && c < r.size() && l[c] == r[c]) ++c;
    if (c < l.size() && c < r.size())
      out = l.substr(0, c);
    else if (c == l.size())
      out = l + '+' + shortest_beyond(std::string_view(r).substr(c + 1), '-');
    else
      out = r + '-' + shortest_beyond(std::string_view(l).substr(c + 1), '+');
  }
  spend(out.size() + 1);
  return out;
}

struct OptionSets {
  std::vector<std::string> left, right;
};

OptionSets options(const std::string& x) {
  OptionSets o;
  for (std::size_t i = 0; i < x.size(); ++i) (x[i] == '+' ? o.left : o.right).push_back(x.substr(0, i));
  std::reverse(o.right.begin(), o.right.end());
  return o;
}

std::string neg(std::string x) {
  for (auto& c : x) c = c == '+' ? '-' : '+';
  return x;
}

class Best {
 public:
  explicit Best(int direction) : direction_(direction) {}
  void offer(std::string v) {
    if (!has_ || cmp(v, value_) * direction_ > 0) {
      value_ = std::move(v);
      has_ = true;
    }
  }
  const std::string* get() const { return has_ ? &value_ : nullptr; }

 private:
  int direction_;
  bool has_ = false;
  std::string value_;
};

using Memo = std::unordered_map<std::string, std::string>;
thread_local Memo t_add_memo;
thread_local Memo t_mul_memo;

std::string key(const std::string& x, const std::string& y) {
  return x < y ? x + '|' + y : y + '|' + x;
}

// x + y = { L(x)+y, x+L(y) | R(x)+y, x+R(y) }
std::string add(const std::string& x, const std::string& y) {
  if (x.empty()) return y;
  if (y.empty()) return x;
  auto k = key(x, y);
  if (auto it = t_add_memo.find(k); it != t_add_memo.end()) return it->second;
  auto ox = options(x);
  auto oy = options(y);
  Best lo(1), hi(-1);
  for (const auto& l : ox.left) lo.offer(add(l, y));
  for (const auto& l : oy.left) lo.offer(add(x, l));
  for (const auto& r : ox.right) hi.offer(add(r, y));
  for (const auto& r : oy.right) hi.offer(add(x, r));
  auto result = simplest(lo.get(), hi.get());
  t_add_memo.emplace(std::move(k), result);
  return result;
}

std::string sub(const std::string& x, const std::string& y) { return add(x, neg(y)); }

// Left options pair options of the same side, right options of opposite
// sides; each contributes x'.y + x.y' - x'.y'.
std::string mul(const std::string& x, const std::string& y) {
  if (x.empty() || y.empty()) return {};
  auto k = key(x, y);
  if (auto it = t_mul_memo.find(k); it != t_mul_memo.end()) return it->second;
  auto ox = options(x);
  auto oy = options(y);
  Best lo(1), hi(-1);
  auto visit = [&](const std::vector<std::string>& xs, const std::vector<std::string>& ys, bool left) {
    for (const auto& a : xs)
      for (const auto& b : ys) {
        auto v = sub(add(mul(a, y), mul(x, b)), mul(a, b));
        (left ? lo : hi).offer(std::move(v));
      }
  };
  visit(ox.left, oy.left, true);
  visit(ox.right, oy.right, true);
  visit(ox.left, oy.right, false);
  visit(ox.right, oy.left, false);
  auto result = simplest(lo.get(), hi.get());
  t_mul_memo.emplace(std::move(k), result);
  return result;
}

std::string neg_recursive(const std::string& x) {
  auto o = options(x);
  Best lo(1), hi(-1);
  for (const auto& r : o.right) lo.offer(neg_recursive(r));
  for (const auto& l : o.left) hi.offer(neg_recursive(l));
  return simplest(lo.get(), hi.get());
}

Rational value(const std::string& x) {
  Rational v = 0;
  std::size_t i = 0;
  while (i < x.size() && x[i] == x[0]) {
    v += x[i] == '+' ? 1 : -1;
    ++i;
  }
  Rational step(1, 2);
  for (; i < x.size(); ++i) {
    if (x[i] == '+')
      v += step;
    else
      v -= step;
    step /= 2;
  }
  return v;
}

}  // namespace fin

// ---------------------------------------------------------------------------
// Run-length helpers for expansions of arbitrary ordinal length.

Ordinal min_ord(const Ordinal& a, const Ordinal& b) { return cmp_ord(a, b) <= 0 ? a : b; }

void append_run(std::vector<SignRun>& runs, const Ordinal& length, Sign sign) {
  if (length.is_zero()) return;
  if (!runs.empty() && runs.back().sign == sign)
    runs.back().length = std_add(runs.back().length, length);
  else
    runs.push_back({length, sign});
}

Ordinal common_prefix_length(const SignExpansion& a, const SignExpansion& b) {
  const auto& ra = a.runs();
  const auto& rb = b.runs();
  Ordinal c;
  std::size_t i = 0, j = 0;
  Ordinal left_a = ra.empty() ? Ordinal{} : ra[0].length;
  Ordinal left_b = rb.empty() ? Ordinal{} : rb[0].length;
  while (i < ra.size() && j < rb.size() && ra[i].sign == rb[j].sign) {
    Ordinal m = min_ord(left_a, left_b);
    c = std_add(c, m);
    left_a = std_left_sub(m, left_a);
    left_b = std_left_sub(m, left_b);
    if (left_a.is_zero() && ++i < ra.size()) left_a = ra[i].length;
    if (left_b.is_zero() && ++j < rb.size()) left_b = rb[j].length;
  }
  return c;
}

std::optional<Sign> sign_at(const SignExpansion& x, const Ordinal& pos) {
  Ordinal start;
  for (const auto& run : x.runs()) {
    Ordinal end = std_add(start, run.length);
    if (cmp_ord(pos, end) < 0) return run.sign;
    start = end;
  }
  return std::nullopt;
}

// Signs at positions in [from, to); `to` defaults to the end.
SignExpansion slice(const SignExpansion& x, const Ordinal& from, const std::optional<Ordinal>& to) {
  std::vector<SignRun> out;
  Ordinal start;
  for (const auto& run : x.runs()) {
    Ordinal end = std_add(start, run.length);
    Ordinal lo = cmp_ord(start, from) >= 0 ? start : from;
    Ordinal hi = to && cmp_ord(*to, end) < 0 ? *to : end;
    if (cmp_ord(lo, hi) < 0) append_run(out, std_left_sub(lo, hi), run.sign);
    start = end;
  }
  return SignExpansion::from_runs(std::move(out));
}

SignExpansion shortest_beyond(const SignExpansion& s, Sign sign) {
  const auto& runs = s.runs();
  if (runs.empty()) return SignExpansion::from_runs({{Ordinal{1}, sign}});
  if (runs[0].sign != sign) return {};
  Ordinal m = runs[0].length;
  if (runs.size() == 1) m = std_add(m, Ordinal{1});
  return SignExpansion::from_runs({{m, sign}});
}

SignExpansion concat(const SignExpansion& a, Sign middle, const SignExpansion& b) {
  auto runs = a.runs();
  append_run(runs, Ordinal{1}, middle);
  for (const auto& r : b.runs()) append_run(runs, r.length, r.sign);
  return SignExpansion::from_runs(std::move(runs));
}

SignExpansion simplest_general(const SignExpansion* lo, const SignExpansion* hi) {
  if (!lo && !hi) return {};
  if (!lo) return shortest_beyond(*hi, Sign::minus);
  if (!hi) return shortest_beyond(*lo, Sign::plus);
  if (s_cmp(*lo, *hi) >= 0) throw OverlappingCut();
  Ordinal c = common_prefix_length(*lo, *hi);
  auto sl = sign_at(*lo, c);
  auto sr = sign_at(*hi, c);
  Ordinal next = std_add(c, Ordinal{1});
  if (sl && sr) return slice(*lo, Ordinal{}, c);
  if (!sl) return concat(*lo, Sign::plus, shortest_beyond(slice(*hi, next, std::nullopt), Sign::minus));
  return concat(*hi, Sign::minus, shortest_beyond(slice(*lo, next, std::nullopt), Sign::plus));
}

const std::string& require_finite(const SignExpansion& x, std::string& storage) {
  if (!x.is_finite()) throw TransfiniteOptions();
  storage = x.signs();
  return storage;
}

Rational floor_dyadic(const Rational& q, unsigned bits) {
  Integer scale = Integer(1) << bits;
  Rational scaled = q * scale;
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  return Rational(f, scale);
}

Rational ceil_dyadic(const Rational& q, unsigned bits) { return -floor_dyadic(-q, bits); }

// Dyadic d <= q (lower) or d >= q (upper), closer to q than to the exact
// inverse.
Rational round_outward(const Rational& q, const Rational& exact, bool lower) {
  if (is_dyadic(q)) return q;
  Rational gap = abs(exact - q);
  for (unsigned bits = 0;; ++bits) {
    Rational d = lower ? floor_dyadic(q, bits) : ceil_dyadic(q, bits);
    if (abs(q - d) < gap) return d;
  }
}

}  // namespace

// ---------------------------------------------------------------------------

SignExpansion SignExpansion::from_runs(std::vector<SignRun> runs) {
  SignExpansion x;
  for (auto& r : runs) append_run(x.runs_, r.length, r.sign);
  return x;
}

SignExpansion SignExpansion::from_signs(std::string_view signs) {
  std::vector<SignRun> runs;
  for (std::size_t i = 0; i < signs.size(); ++i) {
    char c = signs[i];
    if (c != '+' && c != '-') throw ParseError("expected '+' or '-'", i);
    append_run(runs, Ordinal{1}, static_cast<Sign>(c));
  }
  SignExpansion x;
  x.runs_ = std::move(runs);
  return x;
}

SignExpansion SignExpansion::parse(std::string_view text) {
  std::vector<SignRun> runs;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '+' || c == '-') {
      append_run(runs, Ordinal{1}, static_cast<Sign>(c));
      ++i;
    } else if (c == '(') {
      int depth = 0;
      std::size_t colon = std::string_view::npos, j = i;
      for (; j < text.size(); ++j) {
        if (text[j] == '(') ++depth;
        if (text[j] == ')' && --depth == 0) break;
        if (text[j] == ':' && depth == 1) colon = j;
      }
      if (j == text.size() || colon == std::string_view::npos) throw ParseError("malformed run group", i);
      Ordinal length;
      try {
        length = Ordinal::parse(text.substr(i + 1, colon - i - 1));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), i + 1 + e.position());
      }
      std::string_view sign = text.substr(colon + 1, j - colon - 1);
      while (!sign.empty() && std::isspace(static_cast<unsigned char>(sign.front()))) sign.remove_prefix(1);
      while (!sign.empty() && std::isspace(static_cast<unsigned char>(sign.back()))) sign.remove_suffix(1);
      if (sign != "+" && sign != "-") throw ParseError("run sign must be '+' or '-'", colon + 1);
      if (length.is_zero()) throw ParseError("run length must be positive", i + 1);
      append_run(runs, length, static_cast<Sign>(sign[0]));
      i = j + 1;
    } else {
      throw ParseError("unexpected character in sign expansion", i);
    }
  }
  SignExpansion x;
  x.runs_ = std::move(runs);
  return x;
}

bool SignExpansion::is_finite() const {
  return std::all_of(runs_.begin(), runs_.end(), [](const SignRun& r) { return r.length.is_finite(); });
}

std::string SignExpansion::signs() const {
  if (!is_finite()) throw TransfiniteOptions();
  std::string out;
  for (const auto& r : runs_) out.append(r.length.as_natural()->get_ui(), static_cast<char>(r.sign));
  return out;
}

std::string SignExpansion::to_string() const {
  if (is_finite()) return signs();
  std::string out;
  for (const auto& r : runs_) out += "(" + r.length.to_string() + ":" + static_cast<char>(r.sign) + ")";
  return out;
}

std::strong_ordering operator<=>(const SignExpansion& a, const SignExpansion& b) { return s_cmp(a, b); }

// At the first position where the sequences differ: plus > ended > minus.
std::strong_ordering s_cmp(const SignExpansion& x, const SignExpansion& y) {
  Ordinal c = common_prefix_length(x, y);
  auto sx = sign_at(x, c);
  auto sy = sign_at(y, c);
  auto rank = [](const std::optional<Sign>& s) { return !s ? 0 : (*s == Sign::plus ? 1 : -1); };
  return rank(sx) <=> rank(sy);
}

Ordinal birthday(const SignExpansion& x) {
  Ordinal h;
  for (const auto& r : x.runs()) h = std_add(h, r.length);
  return h;
}

Options canonical_options(const SignExpansion& x) {
  std::string storage;
  const auto& s = require_finite(x, storage);
  auto o = fin::options(s);
  Options out;
  for (const auto& l : o.left) out.left.push_back(SignExpansion::from_signs(l));
  for (const auto& r : o.right) out.right.push_back(SignExpansion::from_signs(r));
  return out;
}

SignExpansion simplest_between(std::span<const SignExpansion> left, std::span<const SignExpansion> right) {
  StepScope scope;
  const SignExpansion* lo = nullptr;
  const SignExpansion* hi = nullptr;
  for (const auto& l : left)
    if (!lo || s_cmp(l, *lo) > 0) lo = &l;
  for (const auto& r : right)
    if (!hi || s_cmp(r, *hi) < 0) hi = &r;
  auto result = simplest_general(lo, hi);
  auto h = birthday(result).as_natural();
  spend(h && h->fits_ulong_p() ? h->get_ui() + 1 : result.runs().size() + 1);
  return result;
}

SignExpansion s_neg(const SignExpansion& x) {
  auto runs = x.runs();
  for (auto& r : runs) r.sign = flip(r.sign);
  return SignExpansion::from_runs(std::move(runs));
}

SignExpansion s_neg_recursive(const SignExpansion& x) {
  StepScope scope;
  std::string storage;
  return SignExpansion::from_signs(fin::neg_recursive(require_finite(x, storage)));
}

SignExpansion s_add(const SignExpansion& x, const SignExpansion& y) {
  StepScope scope;
  std::string sx, sy;
  return SignExpansion::from_signs(fin::add(require_finite(x, sx), require_finite(y, sy)));
}

SignExpansion s_sub(const SignExpansion& x, const SignExpansion& y) { return s_add(x, s_neg(y)); }

SignExpansion s_mul(const SignExpansion& x, const SignExpansion& y) {
  StepScope scope;
  std::string sx, sy;
  return SignExpansion::from_signs(fin::mul(require_finite(x, sx), require_finite(y, sy)));
}

std::optional<SignExpansion> s_inv_exact(const SignExpansion& x) {
  if (x.is_zero()) throw PreconditionFault("inverse of zero");
  Rational v = to_dyadic(x);
  Integer n = abs(v.get_num());
  Integer d = v.get_den();
  bool power_of_two = (n == 1) || (d == 1 && (n & (n - 1)) == 0);
  if (!power_of_two) return std::nullopt;
  return from_dyadic(1 / v);
}

// For positive x, with x' ranging over the positive options of x:
//   lower: (1 + (xR - x) yL) / xR,  (1 + (xL - x) yR) / xL
//   upper: (1 + (xL - x) yL) / xL,  (1 + (xR - x) yR) / xR
// starting from yL = {0}. Each formula is monotone in its y argument, so only
// the best lower and upper value of each round needs to be carried.
InverseBounds s_inv_approx(const SignExpansion& x, unsigned depth) {
  if (x.is_zero()) throw PreconditionFault("inverse of zero");
  if (!x.is_finite()) throw TransfiniteOptions();
  if (depth == 0) throw PreconditionFault("s_inv_approx depth must be positive");
  if (s_cmp(x, SignExpansion{}) < 0) {
    auto b = s_inv_approx(s_neg(x), depth);
    return {s_neg(b.upper), s_neg(b.lower)};
  }
  Rational v = to_dyadic(x);
  Rational exact = 1 / v;
  auto o = canonical_options(x);
  std::vector<Rational> xl, xr;
  for (const auto& l : o.left)
    if (Rational q = to_dyadic(l); q > 0) xl.push_back(q);
  for (const auto& r : o.right) xr.push_back(to_dyadic(r));

  Rational lo = 0;
  std::optional<Rational> hi;
  for (unsigned round = 0; round < depth; ++round) {
    Rational next_lo = lo;
    std::optional<Rational> next_hi = hi;
    auto offer_hi = [&](const Rational& q) {
      if (!next_hi || q < *next_hi) next_hi = q;
    };
    for (const auto& r : xr) {
      next_lo = std::max(next_lo, Rational((1 + (r - v) * lo) / r));
      if (hi) offer_hi(Rational((1 + (r - v) * *hi) / r));
    }
    for (const auto& l : xl) {
      if (hi) next_lo = std::max(next_lo, Rational((1 + (l - v) * *hi) / l));
      offer_hi(Rational((1 + (l - v) * lo) / l));
    }
    lo = next_lo;
    hi = next_hi;
  }
  Rational lower = round_outward(lo, exact, true);
  Rational upper;
  if (hi) {
    upper = round_outward(*hi, exact, false);
  } else {
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), exact.get_num_mpz_t(), exact.get_den_mpz_t());
    upper = Rational(f + 1);
  }
  return {from_dyadic(lower), from_dyadic(upper)};
}

Rational to_dyadic(const SignExpansion& x) {
  if (!x.is_finite()) throw PreconditionFault("to_dyadic requires a finite birthday");
  return fin::value(x.signs());
}

bool is_dyadic(const Rational& q) {
  const Integer& d = q.get_den();
  return (d & (d - 1)) == 0;
}

SignExpansion from_dyadic(const Rational& q) {
  if (!is_dyadic(q)) throw PreconditionFault("from_dyadic requires a power-of-two denominator");
  if (q == 0) return {};
  Rational target = abs(q);
  Integer whole;
  mpz_fdiv_q(whole.get_mpz_t(), target.get_num_mpz_t(), target.get_den_mpz_t());
  std::string s;
  Rational v;
  if (target == Rational(whole)) {
    s.assign(whole.get_ui(), '+');
    v = target;
  } else {
    s.assign(whole.get_ui() + 1, '+');
    v = Rational(whole + 1);
  }
  Rational step(1, 2);
  while (v != target) {
    if (target < v) {
      s += '-';
      v -= step;
    } else {
      s += '+';
      v += step;
    }
    step /= 2;
  }
  if (q < 0) s = fin::neg(s);
  return SignExpansion::from_signs(s);
}

SignExpansion s_from_ordinal(const Ordinal& a) {
  if (a.is_zero()) return {};
  return SignExpansion::from_runs({{a, Sign::plus}});
}

void set_step_budget(std::uint64_t steps) { g_step_budget.store(steps, std::memory_order_relaxed); }

std::uint64_t step_budget() { return g_step_budget.load(std::memory_order_relaxed); }

void clear_surreal_memo() {
  fin::t_add_memo.clear();
  fin::t_mul_memo.clear();
}

std::size_t surreal_memo_size() { return fin::t_add_memo.size() + fin::t_mul_memo.size(); }

}  // namespace transfinitum

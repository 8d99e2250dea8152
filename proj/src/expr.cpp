#include "transfinitum/expr.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace transfinitum::expr {

namespace {

// ---------------------------------------------------------------------------
// Parsing

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  NodePtr parse_all() {
    auto e = expression();
    skip();
    if (pos_ < src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return e;
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < src_.size() && src_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) {
      if (pos_ == src_.size()) fail(std::string("expected '") + c + "' at end of input");
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  static NodePtr make(Node::Kind kind, std::size_t position) {
    auto n = std::make_unique<Node>();
    n->kind = kind;
    n->position = position;
    return n;
  }

  NodePtr expression() {
    auto lhs = term();
    while (peek('+') || peek('-')) lhs = binary(std::move(lhs), &Parser::term);
    return lhs;
  }

  NodePtr term() {
    auto lhs = unary();
    while (peek('*') || peek('/')) lhs = binary(std::move(lhs), &Parser::unary);
    return lhs;
  }

  NodePtr binary(NodePtr lhs, NodePtr (Parser::*next)()) {
    auto n = make(Node::Kind::binary, pos_);
    n->op = src_[pos_++];
    n->args.push_back(std::move(lhs));
    n->args.push_back((this->*next)());
    return n;
  }

  NodePtr unary() {
    if (peek('-')) {
      auto n = make(Node::Kind::negate, pos_++);
      n->args.push_back(unary());
      return n;
    }
    return factor();
  }

  NodePtr factor() {
    skip();
    if (pos_ == src_.size()) fail("unexpected end of input");
    std::size_t start = pos_;
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      auto e = expression();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      auto n = make(Node::Kind::number, start);
      n->number = Integer(std::string(src_.substr(start, pos_ - start)));
      return n;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) fail("unexpected '" + std::string(1, c) + "'");
    while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
    std::string name(src_.substr(start, pos_ - start));
    if (name == "s" && pos_ < src_.size() && src_[pos_] == '"') return sign_string(start);
    if (name == "undefined") return make(Node::Kind::undefined, start);
    if (name == "w" || name == "t") {
      auto n = make(name == "w" ? Node::Kind::omega : Node::Kind::t, start);
      if (peek('^')) {
        ++pos_;
        expect('(');
        n->args.push_back(expression());
        expect(')');
      }
      return n;
    }
    return call(std::move(name), start);
  }

  NodePtr sign_string(std::size_t start) {
    std::size_t open = ++pos_;
    auto close = src_.find('"', open);
    if (close == std::string_view::npos) fail("unterminated sign string");
    auto n = make(Node::Kind::signs, start);
    n->text = std::string(src_.substr(open, close - open));
    try {
      (void)SignExpansion::parse(n->text);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), open + e.position());
    }
    pos_ = close + 1;
    return n;
  }

  NodePtr call(std::string name, std::size_t start) {
    static const std::vector<std::string> known{"nsum", "nprod", "ndiff", "std_add", "std_mul", "inv",
                                                "simplest", "ord2s", "ord2h", "birthday", "cnf", "oi",
                                                "oq", "dyadic", "cmp", "d"};
    if (std::find(known.begin(), known.end(), name) == known.end()) {
      pos_ = start;
      fail("unknown name '" + name + "'");
    }
    auto n = make(Node::Kind::call, start);
    n->text = std::move(name);
    expect('(');
    if (peek(')')) {
      ++pos_;
      return n;
    }
    for (;;) {
      if (peek(';')) {
        if (n->has_split) fail("more than one ';'");
        n->has_split = true;
        n->split = n->args.size();
        ++pos_;
        if (peek(')')) break;
        continue;
      }
      n->args.push_back(expression());
      if (peek(',')) {
        ++pos_;
        if (peek(')') || peek(';')) fail("expected an argument");
      } else if (!peek(';') && !peek(')')) {
        fail("expected ',' or ')'");
      }
      if (peek(')')) break;
    }
    ++pos_;
    return n;
  }
};

// ---------------------------------------------------------------------------
// Evaluation

enum class Sort { constant, ordinal, surreal, hahn, undefined, text };

Sort sort_of(const Value& v) {
  switch (v.index()) {
    case 0: return Sort::undefined;
    case 1: return Sort::constant;
    case 2: case 3: case 4: return Sort::ordinal;
    case 5: return Sort::surreal;
    case 6: return Sort::hahn;
    default: return Sort::text;
  }
}

[[noreturn]] void error(const std::string& what, std::size_t pos) { throw EvalError(what, pos); }

// Level inside the ordinal tower: 0 ordinal, 1 ordinal integer, 2 ordinal rational.
int level(const Value& v) {
  if (auto q = std::get_if<Rational>(&v)) {
    if (q->get_den() != 1) return 2;
    return *q >= 0 ? 0 : 1;
  }
  return static_cast<int>(v.index()) - 2;
}

OrdInt to_ordint(const Value& v) {
  if (auto q = std::get_if<Rational>(&v)) return OrdInt(q->get_num());
  if (auto a = std::get_if<Ordinal>(&v)) return oi_from_ordinal(*a);
  return std::get<OrdInt>(v);
}

OrdRat to_ordrat(const Value& v) {
  if (auto q = std::get_if<Rational>(&v)) return OrdRat(OrdInt(q->get_num()), OrdInt(q->get_den()));
  if (auto r = std::get_if<OrdRat>(&v)) return *r;
  return OrdRat(to_ordint(v));
}

Ordinal to_ordinal(const Value& v) {
  if (auto q = std::get_if<Rational>(&v)) return Ordinal(q->get_num());
  return std::get<Ordinal>(v);
}

// The lowest tower level holding `v`, or nullopt outside the tower.
std::optional<Value> demote(const Value& v) {
  if (auto q = std::get_if<Rational>(&v)) {
    if (q->get_den() != 1) return to_ordrat(v);
    if (*q < 0) return to_ordint(v);
    return to_ordinal(v);
  }
  if (auto r = std::get_if<OrdRat>(&v)) {
    if (r->den() != OrdInt(1)) return v;
    return demote(r->num());
  }
  if (auto i = std::get_if<OrdInt>(&v)) {
    if (auto a = oi_to_ordinal(*i)) return *a;
    return v;
  }
  if (std::holds_alternative<Ordinal>(v)) return v;
  return std::nullopt;
}

Ordinal want_ordinal(const Value& v, const std::string& what, std::size_t pos) {
  auto d = demote(v);
  if (!d || !std::holds_alternative<Ordinal>(*d)) error(what + " expects an ordinal", pos);
  return std::get<Ordinal>(*d);
}

SignExpansion to_surreal(const Value& v, std::size_t pos) {
  if (auto s = std::get_if<SignExpansion>(&v)) return *s;
  const auto& q = std::get<Rational>(v);
  if (!is_dyadic(q)) error("constant " + to_string(q) + " is not dyadic", pos);
  return from_dyadic(q);
}

HahnSeries to_hahn(const Value& v) {
  if (auto h = std::get_if<HahnSeries>(&v)) return *h;
  return HahnSeries(std::get<Rational>(v));
}

Value arith_constant(char op, const Rational& a, const Rational& b, std::size_t pos) {
  switch (op) {
    case '+': return Rational(a + b);
    case '-': return Rational(a - b);
    case '*': return Rational(a * b);
    default:
      if (b == 0) error("division by zero", pos);
      return Rational(a / b);
  }
}

Value arith_ordinal(char op, const Value& a, const Value& b, std::size_t pos) {
  int lv = std::max(level(a), level(b));
  if (op == '/') {
    OrdRat d = to_ordrat(b);
    if (d.is_zero()) error("division by zero", pos);
    return oq_div(to_ordrat(a), d);
  }
  if (lv == 2) {
    OrdRat x = to_ordrat(a), y = to_ordrat(b);
    return op == '+' ? oq_add(x, y) : op == '-' ? oq_sub(x, y) : oq_mul(x, y);
  }
  if (lv == 0 && op != '-') {
    Ordinal x = to_ordinal(a), y = to_ordinal(b);
    return op == '+' ? nat_sum(x, y) : nat_prod(x, y);
  }
  OrdInt x = to_ordint(a), y = to_ordint(b);
  return op == '+' ? oi_add(x, y) : op == '-' ? oi_sub(x, y) : oi_mul(x, y);
}

Value arith_surreal(char op, const Value& a, const Value& b, std::size_t pos) {
  SignExpansion x = to_surreal(a, pos), y = to_surreal(b, pos);
  switch (op) {
    case '+': return s_add(x, y);
    case '-': return s_sub(x, y);
    case '*': return s_mul(x, y);
    default: {
      if (y.is_zero()) error("division by zero", pos);
      auto inv = s_inv_exact(y);
      if (!inv) return Undefined{};
      return s_mul(x, *inv);
    }
  }
}

Value arith_hahn(char op, const Value& a, const Value& b, std::size_t pos) {
  HahnSeries x = to_hahn(a), y = to_hahn(b);
  switch (op) {
    case '+': return h_add(x, y);
    case '-': return h_sub(x, y);
    case '*': return h_mul(x, y);
    default: {
      if (y.is_zero()) error("division by zero", pos);
      if (y.terms().size() != 1) error("division by a series of several terms; use inv(x, n)", pos);
      const auto& m = y.leading();
      return h_mul(x, HahnSeries::monomial(1 / m.coefficient, oq_neg(m.exponent)));
    }
  }
}

Sort common_sort(const Value& a, const Value& b, std::size_t pos) {
  Sort sa = sort_of(a), sb = sort_of(b);
  if (sa == Sort::text || sb == Sort::text) error("comparison results cannot be used as operands", pos);
  if (sa == Sort::undefined || sb == Sort::undefined) return Sort::undefined;
  if (sa == Sort::constant) return sb;
  if (sb == Sort::constant || sa == sb) return sa;
  error("cannot mix sorts without conversion", pos);
}

Value arith(char op, const Value& a, const Value& b, std::size_t pos) {
  Sort s = common_sort(a, b, pos);
  if (s == Sort::undefined) return Undefined{};
  switch (s) {
    case Sort::constant: return arith_constant(op, std::get<Rational>(a), std::get<Rational>(b), pos);
    case Sort::ordinal: return arith_ordinal(op, a, b, pos);
    case Sort::surreal: return arith_surreal(op, a, b, pos);
    default: return arith_hahn(op, a, b, pos);
  }
}

Value negate(const Value& v, std::size_t pos) {
  return std::visit(
      [&](const auto& x) -> Value {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Undefined>) return x;
        else if constexpr (std::is_same_v<T, Rational>) return Rational(-x);
        else if constexpr (std::is_same_v<T, Ordinal>) return oi_neg(oi_from_ordinal(x));
        else if constexpr (std::is_same_v<T, OrdInt>) return oi_neg(x);
        else if constexpr (std::is_same_v<T, OrdRat>) return oq_neg(x);
        else if constexpr (std::is_same_v<T, SignExpansion>) return s_neg(x);
        else if constexpr (std::is_same_v<T, HahnSeries>) return h_neg(x);
        else error("comparison results cannot be used as operands", pos);
      },
      v);
}

std::strong_ordering compare(const Value& a, const Value& b, std::size_t pos) {
  switch (common_sort(a, b, pos)) {
    case Sort::constant: return to_ordering(cmp(std::get<Rational>(a), std::get<Rational>(b)));
    case Sort::ordinal: return oq_cmp(to_ordrat(a), to_ordrat(b));
    case Sort::surreal: return s_cmp(to_surreal(a, pos), to_surreal(b, pos));
    case Sort::hahn: return h_cmp(to_hahn(a), to_hahn(b));
    default: error("cmp of an undefined value", pos);
  }
}

Value call(const Node& n, std::vector<Value> args) {
  const std::string& f = n.text;
  std::size_t pos = n.position;
  auto arity = [&](std::size_t lo, std::size_t hi) {
    if (args.size() < lo || args.size() > hi) {
      std::string want = lo == hi ? std::to_string(lo) : std::to_string(lo) + " to " + std::to_string(hi);
      if (hi == SIZE_MAX) want = "at least " + std::to_string(lo);
      error(f + " takes " + want + " argument" + (hi == 1 ? "" : "s"), pos);
    }
  };
  if (f != "simplest" && n.has_split) error("';' is only allowed in simplest", pos);
  if (f == "simplest") {
    if (!n.has_split) error("simplest expects left and right options separated by ';'", pos);
  } else {
    for (const auto& a : args)
      if (std::holds_alternative<Undefined>(a)) return Undefined{};
  }

  if (f == "nsum" || f == "nprod") {
    arity(2, SIZE_MAX);
    Ordinal acc = want_ordinal(args[0], f, pos);
    for (std::size_t i = 1; i < args.size(); ++i) {
      Ordinal x = want_ordinal(args[i], f, pos);
      acc = f == "nsum" ? nat_sum(acc, x) : nat_prod(acc, x);
    }
    return acc;
  }
  if (f == "ndiff" || f == "std_add" || f == "std_mul") {
    arity(2, 2);
    Ordinal x = want_ordinal(args[0], f, pos), y = want_ordinal(args[1], f, pos);
    if (f == "std_add") return std_add(x, y);
    if (f == "std_mul") return std_mul(x, y);
    auto d = nat_diff(x, y);
    if (!d) return Undefined{};
    return *d;
  }
  if (f == "inv") {
    arity(1, 2);
    const Value& x = args[0];
    if (args.size() == 2 && !std::holds_alternative<HahnSeries>(x)) error("only Hahn series take a depth", pos);
    switch (sort_of(x)) {
      case Sort::constant:
        return arith_constant('/', Rational(1), std::get<Rational>(x), pos);
      case Sort::ordinal: {
        OrdRat r = to_ordrat(x);
        if (r.is_zero()) error("division by zero", pos);
        return oq_inv(r);
      }
      case Sort::surreal: {
        if (std::get<SignExpansion>(x).is_zero()) error("division by zero", pos);
        auto e = s_inv_exact(std::get<SignExpansion>(x));
        if (!e) return Undefined{};
        return *e;
      }
      case Sort::hahn: {
        unsigned depth = 8;
        if (args.size() == 2) {
          auto k = want_ordinal(args[1], "inv depth", pos).as_natural();
          if (!k || *k < 1 || *k > 64) error("inv depth must be between 1 and 64", pos);
          depth = static_cast<unsigned>(k->get_ui());
        }
        return h_inv_trunc(std::get<HahnSeries>(x), depth);
      }
      default: error("inv of a comparison result", pos);
    }
  }
  if (f == "simplest") {
    std::vector<SignExpansion> left, right;
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (std::holds_alternative<Undefined>(args[i])) return Undefined{};
      Sort s = sort_of(args[i]);
      if (s != Sort::surreal && s != Sort::constant) error("cannot mix sorts without conversion", n.args[i]->position);
      (i < n.split ? left : right).push_back(to_surreal(args[i], n.args[i]->position));
    }
    return simplest_between(left, right);
  }
  if (f == "ord2s") {
    arity(1, 1);
    return s_from_ordinal(want_ordinal(args[0], f, pos));
  }
  if (f == "ord2h") {
    arity(1, 1);
    if (std::holds_alternative<Rational>(args[0])) return h_from_rational(std::get<Rational>(args[0]));
    auto d = demote(args[0]);
    if (!d || std::holds_alternative<OrdRat>(*d)) error("ord2h expects an ordinal or ordinal integer", pos);
    if (auto a = std::get_if<Ordinal>(&*d)) return h_from_ordinal(*a);
    return h_from_ordint(std::get<OrdInt>(*d));
  }
  if (f == "birthday") {
    arity(1, 1);
    Sort s = sort_of(args[0]);
    if (s != Sort::surreal && s != Sort::constant) error("birthday expects a surreal", pos);
    return birthday(to_surreal(args[0], pos));
  }
  if (f == "cnf" || f == "oi" || f == "oq") {
    arity(1, 1);
    auto d = demote(args[0]);
    if (!d) error(f + " expects a value of the ordinal tower", pos);
    if (f == "cnf") return *d;
    if (f == "oq") return to_ordrat(*d);
    if (std::holds_alternative<OrdRat>(*d)) error("oi expects an ordinal integer", pos);
    return to_ordint(*d);
  }
  if (f == "dyadic") {
    arity(1, 1);
    Sort s = sort_of(args[0]);
    if (s != Sort::surreal && s != Sort::constant) error("dyadic expects a surreal", pos);
    auto x = to_surreal(args[0], pos);
    if (!x.is_finite()) error("dyadic expects a finite birthday", pos);
    return to_dyadic(x);
  }
  if (f == "d") {
    arity(1, 1);
    if (!std::holds_alternative<Rational>(args[0])) error("d expects a rational constant", pos);
    return to_surreal(args[0], pos);
  }
  // cmp
  arity(2, 2);
  return Text{ordering_name(compare(args[0], args[1], pos))};
}

Value eval_node(const Node& n) {
  switch (n.kind) {
    case Node::Kind::number:
      return Rational(n.number);
    case Node::Kind::undefined:
      return Undefined{};
    case Node::Kind::omega:
      if (n.args.empty()) return Ordinal::omega();
      {
        Value e = evaluate(*n.args[0]);
        if (std::holds_alternative<Undefined>(e)) return e;
        return omega_pow(want_ordinal(e, "w^(...)", n.args[0]->position));
      }
    case Node::Kind::t:
      if (n.args.empty()) return HahnSeries::t();
      {
        Value e = evaluate(*n.args[0]);
        if (std::holds_alternative<Undefined>(e)) return e;
        auto s = sort_of(e);
        if (s != Sort::ordinal && s != Sort::constant)
          error("t^(...) expects an exponent from the ordinal tower", n.args[0]->position);
        return HahnSeries::monomial(1, to_ordrat(e));
      }
    case Node::Kind::signs:
      return SignExpansion::parse(n.text);
    case Node::Kind::negate:
      return negate(evaluate(*n.args[0]), n.position);
    case Node::Kind::binary: {
      Value a = evaluate(*n.args[0]);
      Value b = evaluate(*n.args[1]);
      return arith(n.op, a, b, n.position);
    }
    case Node::Kind::call: {
      std::vector<Value> args;
      for (const auto& a : n.args) args.push_back(evaluate(*a));
      return call(n, std::move(args));
    }
  }
  return Undefined{};
}

}  // namespace

NodePtr parse(std::string_view source) { return Parser(source).parse_all(); }

Value evaluate(const Node& node) {
  try {
    return eval_node(node);
  } catch (const Fault& e) {
    throw EvalError(e.what(), node.position);
  }
}

std::string render(const Value& value) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Undefined>) return "undefined";
        else if constexpr (std::is_same_v<T, Rational>) return to_string(x);
        else if constexpr (std::is_same_v<T, SignExpansion>) return "s\"" + x.to_string() + "\"";
        else if constexpr (std::is_same_v<T, Text>) return x.value;
        else if constexpr (std::is_same_v<T, OrdRat>) {
          // Finite fractions print as rational constants, which is how they parse back.
          auto finite = [](const OrdInt& v) { return v.is_zero() || v.terms().front().exponent.is_zero(); };
          if (finite(x.num()) && finite(x.den()) && !(x.den() == OrdInt(1))) {
            Integer p = x.num().is_zero() ? Integer(0) : x.num().terms().front().coefficient;
            return to_string(Rational(p, x.den().terms().front().coefficient));
          }
          return x.to_string();
        }
        else return x.to_string();
      },
      value);
}

std::string eval(std::string_view source) { return render(evaluate(*parse(source))); }

}  // namespace transfinitum::expr

#pragma once

#include <compare>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace transfinitum {

using Integer = mpz_class;
using Rational = mpq_class;

// Base of every fault raised by the library. Partial operations whose
// partiality is semantic (natural difference, exact surreal inverse) return
// std::optional instead of throwing.
class Fault : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class PreconditionFault : public Fault {
 public:
  using Fault::Fault;
};

class OutOfOracleRange : public Fault {
 public:
  OutOfOracleRange() : Fault("out of oracle range") {}
};

class OverlappingCut : public Fault {
 public:
  OverlappingCut() : Fault("overlapping cut") {}
};

class StepBudgetExceeded : public Fault {
 public:
  StepBudgetExceeded() : Fault("step budget exceeded") {}
};

class TransfiniteOptions : public Fault {
 public:
  TransfiniteOptions() : Fault("transfinite options") {}
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

inline int sign_of(const Integer& v) { return sgn(v); }
inline int sign_of(const Rational& v) { return sgn(v); }

inline std::strong_ordering to_ordering(int c) {
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

inline const char* ordering_name(std::strong_ordering o) {
  if (o < 0) return "LT";
  if (o > 0) return "GT";
  return "EQ";
}

inline std::string to_string(const Integer& v) { return v.get_str(); }

inline std::string to_string(const Rational& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

}  // namespace transfinitum

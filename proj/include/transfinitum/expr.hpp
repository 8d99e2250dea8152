#pragma once

// The expression language of the command-line tool.
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | factor
//   factor := natural | 'w' ['^' '(' expr ')'] | 't' ['^' '(' expr ')']
//           | 's"' signs '"' | name '(' args ')' | '(' expr ')'
//
// Values have one of three sorts (ordinal tower, surreal, Hahn series) plus
// rational constants, which adopt the sort of whatever they meet. Mixing two
// different sorts requires an explicit conversion.

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "transfinitum/hahn.hpp"
#include "transfinitum/surreal.hpp"
#include "transfinitum/tower.hpp"

namespace transfinitum::expr {

struct Node {
  enum class Kind { number, omega, t, undefined, signs, negate, binary, call };
  Kind kind;
  std::size_t position = 0;  // byte offset into the source
  Integer number;
  std::string text;  // sign string or function name
  char op = 0;       // binary operator
  std::vector<std::unique_ptr<Node>> args;
  std::size_t split = 0;  // simplest(...): args before `split` are left options
  bool has_split = false;
};

using NodePtr = std::unique_ptr<Node>;

// Throws ParseError with the offending byte offset.
NodePtr parse(std::string_view source);

struct Undefined {
  friend bool operator==(Undefined, Undefined) { return true; }
};
struct Text {
  std::string value;
};

using Value = std::variant<Undefined, Rational, Ordinal, OrdInt, OrdRat, SignExpansion, HahnSeries, Text>;

// Module faults and sort errors carry the position of the node that raised them.
class EvalError : public std::runtime_error {
 public:
  EvalError(const std::string& what, std::size_t position) : std::runtime_error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

Value evaluate(const Node& node);
std::string render(const Value& value);

// parse, evaluate, render.
std::string eval(std::string_view source);

}  // namespace transfinitum::expr

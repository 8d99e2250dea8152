#include <doctest.h>

#include "support.hpp"
#include "transfinitum/expr.hpp"
#include "transfinitum/sample.hpp"

using namespace support;
using transfinitum::expr::eval;

namespace {

std::size_t error_position(const std::string& source) {
  try {
    eval(source);
  } catch (const ParseError& e) {
    return e.position();
  } catch (const expr::EvalError& e) {
    return e.position();
  }
  return std::string::npos;
}

std::string error_text(const std::string& source) {
  try {
    eval(source);
  } catch (const std::exception& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("ordinal expressions") {
  CHECK(eval("w^(w)*2 + 3") == "w^(w)*2 + 3");
  CHECK(eval("nprod(w+1, w+1)") == "w^(2) + w*2 + 1");
  CHECK(eval("(w+1)*(w+1)") == "w^(2) + w*2 + 1");
  CHECK(eval("ndiff(w, 1)") == "undefined");
  CHECK(eval("undefined + w") == "undefined");
  CHECK(eval("ndiff(w + 5, 5)") == "w");
  CHECK(eval("nsum(1, w, w^(2))") == "w^(2) + w + 1");
  CHECK(eval("std_add(1, w)") == "w");
  CHECK(eval("std_mul(w, 2)") == "w*2");
  CHECK(eval("cnf(w^(0)*3 + 0)") == "3");
  CHECK(eval("w - 1") == "w - 1");
  CHECK(eval("(w - 1)*(w - 1)") == "w^(2) - w*2 + 1");
  CHECK(eval("(w - 1) + 1") == "w");
  CHECK(eval("std_add((w - 1) + 1, 1)") == "w + 1");
  CHECK(eval("1/w + 1/w") == "(2)/(w)");
  CHECK(eval("oq(w)*(1/w)") == "1");
  CHECK(eval("oi(3) - 5") == "-2");
  CHECK(eval("oq(3)/4") == "3/4");
  CHECK(eval("cmp(1/w, 1/1000)") == "LT");
  CHECK(eval("cmp(w - 5, 100)") == "GT");
  CHECK(eval("-w") == "-w");
}

TEST_CASE("constants") {
  CHECK(eval("3/4") == "3/4");
  CHECK(eval("-3") == "-3");
  CHECK(eval("1/2 + 1/3") == "5/6");
  CHECK(eval("inv(4)") == "1/4");
}

TEST_CASE("surreal expressions") {
  CHECK(eval("simplest(s\"+-\" ; s\"+\")") == "s\"+-+\"");
  CHECK(eval("simplest(;)") == "s\"\"");
  CHECK(eval("simplest(0, 1/2 ; 1)") == "s\"+-+\"");
  CHECK(eval("birthday(d(3/4))") == "3");
  CHECK(eval("d(1/2) + d(1/2)") == "s\"+\"");
  CHECK(eval("s\"++\" * d(1/2)") == "s\"+\"");
  CHECK(eval("-s\"+-\"") == "s\"-+\"");
  CHECK(eval("d(-5/8)") == "s\"-+-+\"");
  CHECK(eval("dyadic(s\"+-+\")") == "3/4");
  CHECK(eval("inv(d(2))") == "s\"+-\"");
  CHECK(eval("inv(d(3))") == "undefined");
  CHECK(eval("d(1)/d(4)") == "s\"+--\"");
  CHECK(eval("ord2s(w*2 + 1)") == "s\"(w*2 + 1:+)\"");
  CHECK(eval("s\"(w:+)(1:-)\"") == "s\"(w:+)(1:-)\"");
  CHECK(eval("cmp(s\"(w:+)\", d(1000))") == "GT");
  CHECK(eval("s\"+\" + 1") == "s\"++\"");
}

TEST_CASE("Hahn expressions") {
  CHECK(eval("(t + 1)*(t - 1)") == "t^(2) - 1");
  CHECK(eval("2*t + 3 - 5*t^(-1)") == "2*t + 3 - 5*t^(-1)");
  CHECK(eval("3*t^(1/w) * 2*t^(1/w)") == "6*t^((2)/(w))");
  CHECK(eval("inv(1 - t^(-1), 3)") == "1 + t^(-1) + t^(-2)");
  CHECK(eval("inv(t)") == "t^(-1)");
  CHECK(eval("ord2h(w*2 + 3)") == "2*t + 3");
  CHECK(eval("ord2h(w - 1)") == "t - 1");
  CHECK(eval("ord2h(w^(w))") == "t^(w)");
  CHECK(eval("t/(2*t^(3))") == "1/2*t^(-2)");
  CHECK(eval("cmp(t^(-1), 1/1000)") == "LT");
}

TEST_CASE("sort discipline") {
  CHECK(error_text("w + s\"+\"") == "cannot mix sorts without conversion");
  CHECK(error_position("w + s\"+\"") == 2);
  CHECK(error_text("t + w") == "cannot mix sorts without conversion");
  CHECK(error_text("ord2s(w) + ord2h(w)") == "cannot mix sorts without conversion");
  CHECK(error_text("simplest(w ; )") == "cannot mix sorts without conversion");
  CHECK(eval("cmp(ord2s(w), s\"+\")") == "GT");
  CHECK(error_text("ord2s(w) + s\"+\"") == "transfinite options");
}

TEST_CASE("diagnostics carry positions") {
  CHECK_THROWS_AS(eval("w +"), ParseError);
  CHECK(error_position("w +") == 3);
  CHECK(error_position("nsum(w, x)") == 8);
  CHECK(error_text("foo(1)") == "unknown name 'foo'");
  CHECK(error_position("s\"+x\"") == 3);
  CHECK(error_text("s\"++") == "unterminated sign string");
  CHECK(error_position("1 + 1/0") == 5);
  CHECK(error_text("1/0") == "division by zero");
  CHECK(error_text("d(1/3)") == "constant 1/3 is not dyadic");
  CHECK(error_text("simplest(1 ; 0)") == "overlapping cut");
  CHECK(error_text("simplest(1, 2)") == "simplest expects left and right options separated by ';'");
  CHECK(error_text("nsum(w)") == "nsum takes at least 2 arguments");
  CHECK(error_text("std_add(w - 2, 1)") == "std_add expects an ordinal");
  CHECK(error_text("d(1/2) + d(1/4) + s\"(w:+)\"") == "transfinite options");
  CHECK(error_text("nsum(w,)") == "expected an argument");
  CHECK(error_text("(w") == "expected ')' at end of input");
  CHECK(error_text("cmp(w, 1) + 1") == "comparison results cannot be used as operands");
}

TEST_CASE("evaluation is deterministic") {
  const std::string src = "nprod(w^(w) + w*3 + 1, w^(2) + 7) - w^(5)";
  CHECK(eval(src) == eval(src));
}

TEST_CASE("canonical renderings parse back to themselves") {
  sample::Rng rng(99);
  auto round_trip = [](const std::string& text) {
    INFO(text);
    REQUIRE(eval(text) == text);
  };
  for (int i = 0; i < 200; ++i) {
    round_trip(sample::ordinal(rng).to_string());
    round_trip(sample::ordint(rng).to_string());
    round_trip(expr::render(sample::ordrat(rng, {2, 2, 5})));
    round_trip("s\"" + sample::sign_expansion(rng, 8).to_string() + "\"");
    round_trip("s\"" + sample::transfinite_expansion(rng).to_string() + "\"");
    round_trip(sample::hahn(rng).to_string());
  }
}

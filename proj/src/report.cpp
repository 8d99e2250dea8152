#include "transfinitum/report.hpp"

#include <sstream>

namespace transfinitum {

void Report::record(bool passed, const std::string& inputs, const std::string& expected, const std::string& got) {
  ++cases;
  if (passed) return;
  ++failures;
  if (!counterexample) counterexample = Counterexample{inputs, expected, got};
}

void Report::absorb(Report part) {
  cases += part.cases;
  failures += part.failures;
  if (!counterexample && part.counterexample) {
    counterexample = part.counterexample;
    counterexample->inputs = part.suite + ": " + counterexample->inputs;
  }
  parts.push_back(std::move(part));
}

namespace {

void write_text(const Report& r, std::ostringstream& out, int indent) {
  std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  out << pad << (r.ok() ? "ok   " : "FAIL ") << r.suite << "  cases=" << r.cases << " failures=" << r.failures
      << "\n";
  if (r.counterexample && r.parts.empty()) {
    out << pad << "     inputs:   " << r.counterexample->inputs << "\n";
    out << pad << "     expected: " << r.counterexample->expected << "\n";
    out << pad << "     got:      " << r.counterexample->got << "\n";
  }
  for (const auto& p : r.parts) write_text(p, out, indent + 1);
}

}  // namespace

std::string Report::to_text() const {
  std::ostringstream out;
  write_text(*this, out, 0);
  return out.str();
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["cases"] = cases;
  j["failures"] = failures;
  if (counterexample)
    j["counterexample"] = {{"inputs", counterexample->inputs},
                           {"expected", counterexample->expected},
                           {"got", counterexample->got}};
  else
    j["counterexample"] = nullptr;
  if (!parts.empty()) {
    j["laws"] = nlohmann::json::array();
    for (const auto& p : parts) j["laws"].push_back(p.to_json());
  }
  return j;
}

}  // namespace transfinitum

#include "gkern/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace gkern {

namespace {
// Keep failing reports readable on large instances.
constexpr std::size_t kMaxViolations = 16;
}  // namespace

void LawCheck::observe(double deviation, const std::string& where) {
  ++exercised;
  max_deviation = std::max(max_deviation, deviation);
  if (!(deviation <= tolerance)) {
    passed = false;
    if (violations.size() < kMaxViolations) violations.push_back(where);
  }
}

void LawCheck::expect(bool ok, const std::string& where) {
  ++exercised;
  if (!ok) {
    passed = false;
    if (violations.size() < kMaxViolations) violations.push_back(where);
  }
}

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const LawCheck& c) { return c.passed; });
}

LawCheck& Report::add(std::string law, double tolerance) {
  LawCheck c;
  c.law = std::move(law);
  c.tolerance = tolerance;
  checks.push_back(std::move(c));
  return checks.back();
}

const LawCheck& Report::at(const std::string& law) const {
  for (const auto& c : checks) {
    if (c.law == law) return c;
  }
  throw std::out_of_range("no law named " + law);
}

std::vector<std::string> Report::failed_laws() const {
  std::vector<std::string> out;
  for (const auto& c : checks) {
    if (!c.passed) out.push_back(c.law);
  }
  return out;
}

void Report::append(const Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

}  // namespace gkern

#pragma once

#include <cstddef>
#include <string>
#include <deque>
#include <vector>

#include "gkern/tolerances.hpp"

namespace gkern {

/// Outcome of checking one law over every applicable tuple.
struct LawCheck {
  std::string law;
  bool passed = true;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  // Tuples on which the law's hypothesis held and the conclusion was tested.
  std::size_t exercised = 0;
  std::vector<std::string> violations;

  bool vacuous() const noexcept { return exercised == 0; }

  /// Records a deviation; fails the check when it exceeds the tolerance.
  void observe(double deviation, const std::string& where);
  /// Records a boolean outcome.
  void expect(bool ok, const std::string& where);
};

struct Report {
  std::string subject;
  // deque: references returned by add() stay valid.
  std::deque<LawCheck> checks;

  bool passed() const;
  LawCheck& add(std::string law, double tolerance = 0.0);
  /// Throws std::out_of_range if no check has that name.
  const LawCheck& at(const std::string& law) const;
  std::vector<std::string> failed_laws() const;
  void append(const Report& other);
};

}  // namespace gkern

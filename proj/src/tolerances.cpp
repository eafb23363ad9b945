#include "gkern/tolerances.hpp"

#include <array>
#include <utility>

namespace gkern {
namespace {

using Field = double Tolerances::*;

const std::array<std::pair<const char*, Field>, 19>& table() {
  static const std::array<std::pair<const char*, Field>, 19> t{{
      {"hermitian", &Tolerances::hermitian},
      {"idempotent", &Tolerances::idempotent},
      {"invariance", &Tolerances::invariance},
      {"trace", &Tolerances::trace},
      {"orthogonal_parts", &Tolerances::orthogonal_parts},
      {"eigen_reconstruction", &Tolerances::eigen_reconstruction},
      {"cluster_gap", &Tolerances::cluster_gap},
      {"irreducible", &Tolerances::irreducible},
      {"identity", &Tolerances::identity},
      {"assertion", &Tolerances::assertion},
      {"symmetry", &Tolerances::symmetry},
      {"reproduce", &Tolerances::reproduce},
      {"membership", &Tolerances::membership},
      {"constant", &Tolerances::constant},
      {"expansion", &Tolerances::expansion},
      {"relation", &Tolerances::relation},
      {"lambda", &Tolerances::lambda},
      {"orthogonality", &Tolerances::orthogonality},
      {"rank", &Tolerances::rank},
  }};
  return t;
}

}  // namespace

const std::vector<std::string>& Tolerances::names() {
  static const std::vector<std::string> out = [] {
    std::vector<std::string> v;
    for (const auto& [name, field] : table()) v.emplace_back(name);
    return v;
  }();
  return out;
}

bool Tolerances::set(std::string_view name, double value) {
  for (const auto& [key, field] : table()) {
    if (name == key) {
      this->*field = value;
      return true;
    }
  }
  return false;
}

std::optional<double> Tolerances::get(std::string_view name) const {
  for (const auto& [key, field] : table()) {
    if (name == key) return this->*field;
  }
  return std::nullopt;
}

}  // namespace gkern

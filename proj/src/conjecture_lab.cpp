#include "gkern/conjecture_lab.hpp"

#include <cmath>

#include "gkern/error.hpp"
#include "gkern/relation.hpp"

namespace gkern {

std::string to_string(ConjectureId id) {
  switch (id) {
    case ConjectureId::PositiveImpliesRelated: return "positive-implies-related";
    case ConjectureId::OrthogonalIffTrivialIntersection: return "orthogonal-iff-trivial-intersection";
    case ConjectureId::OrthogonalKernelBasis: return "orthogonal-kernel-basis";
  }
  return "unknown";
}

std::string to_string(ConjectureStatus status) {
  switch (status) {
    case ConjectureStatus::ConfirmedOnInstance: return "confirmed-on-instance";
    case ConjectureStatus::Counterexample: return "counterexample";
    case ConjectureStatus::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

ConjectureId parse_conjecture_id(const std::string& text) {
  for (auto id : {ConjectureId::PositiveImpliesRelated, ConjectureId::OrthogonalIffTrivialIntersection,
                  ConjectureId::OrthogonalKernelBasis}) {
    if (to_string(id) == text) return id;
  }
  throw Error(ErrorCode::ParseError, "unknown conjecture id '" + text + "'");
}

ConjectureStatus parse_conjecture_status(const std::string& text) {
  for (auto s : {ConjectureStatus::ConfirmedOnInstance, ConjectureStatus::Counterexample,
                 ConjectureStatus::Inconclusive}) {
    if (to_string(s) == text) return s;
  }
  throw Error(ErrorCode::ParseError, "unknown conjecture status '" + text + "'");
}

namespace {

ConjectureReport blank(ConjectureId id, const std::string& instance_id, const Tolerances& tol) {
  ConjectureReport r;
  r.conjecture = id;
  r.instance_id = instance_id;
  r.relation_threshold = tol.relation;
  r.orthogonality_threshold = tol.orthogonality;
  return r;
}

void finish(ConjectureReport& r) {
  r.status = r.witnesses.empty() ? ConjectureStatus::ConfirmedOnInstance
                                 : ConjectureStatus::Counterexample;
}

bool orthogonal(const KernelFamily& kf, Point x, Point y, const Tolerances& tol) {
  return std::abs(kf.value(x, y)) <= tol.orthogonality * kf.c();
}

bool positive_counterexample(const KernelFamily& kf, Point x, Point y, const Tolerances& tol) {
  return !orthogonal(kf, x, y, tol) && !related(kf, x, y, tol);
}

}  // namespace

ConjectureReport probe_positive_implies_related(const KernelFamily& kf, const std::string& instance_id,
                                                const Tolerances& tol) {
  ConjectureReport r = blank(ConjectureId::PositiveImpliesRelated, instance_id, tol);
  for (Point x = 0; x < kf.degree(); ++x) {
    for (Point y = 0; y < kf.degree(); ++y) {
      ++r.pairs_scanned;
      if (positive_counterexample(kf, x, y, tol)) {
        r.witnesses.push_back({{x, y}, {std::abs(kf.value(x, y)) / kf.c()}, {}});
      }
    }
  }
  finish(r);
  return r;
}

ConjectureReport probe_orthogonality_conjecture(const KernelFamily& kf,
                                                const std::string& instance_id,
                                                const Tolerances& tol) {
  if (!is_transitive(kf.group())) {
    throw Error(ErrorCode::NonTransitive, "orthogonality probe needs a transitive action");
  }
  ConjectureReport r = blank(ConjectureId::OrthogonalIffTrivialIntersection, instance_id, tol);
  std::vector<Subgroup> e;
  for (Point x = 0; x < kf.degree(); ++x) e.push_back(relation_stabilizer(kf, x, tol).subgroup);
  for (Point x = 0; x < kf.degree(); ++x) {
    for (Point y = 0; y < kf.degree(); ++y) {
      ++r.pairs_scanned;
      const Subgroup meet = subgroup_intersection(e[x], e[y]);
      if (orthogonal(kf, x, y, tol) != meet.is_trivial()) {
        r.witnesses.push_back({{x, y}, {std::abs(kf.value(x, y))}, {meet.order()}});
      }
    }
  }
  finish(r);
  return r;
}

std::optional<std::vector<Point>> search_orthogonal_kernel_basis(const KernelFamily& kf, Point x,
                                                                 std::size_t cap,
                                                                 const Tolerances& tol) {
  const std::size_t d = kf.dim();
  if (d > cap) {
    throw Error(ErrorCode::SearchCapExceeded,
                "dim H = " + std::to_string(d) + " exceeds the search cap " + std::to_string(cap));
  }
  if (x >= kf.degree()) throw Error(ErrorCode::InvalidArgument, "point out of range");
  std::vector<Point> chosen{x};
  // Depth-first over increasing candidates; prune on the first
  // non-orthogonal pair.
  auto extend = [&](auto&& self, Point from) -> bool {
    if (chosen.size() == d) return true;
    for (Point y = from; y < kf.degree(); ++y) {
      if (y == x) continue;
      bool ok = true;
      for (auto z : chosen) {
        if (!orthogonal(kf, z, y, tol)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(y);
      if (self(self, y + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (extend(extend, 0)) return chosen;
  return std::nullopt;
}

ConjectureReport probe_orthogonal_kernel_basis(const KernelFamily& kf, const std::string& instance_id,
                                               std::size_t cap, const Tolerances& tol) {
  ConjectureReport r = blank(ConjectureId::OrthogonalKernelBasis, instance_id, tol);
  if (kf.dim() > cap) {
    r.status = ConjectureStatus::Inconclusive;
    r.reason = "dim H = " + std::to_string(kf.dim()) + " exceeds the search cap " +
               std::to_string(cap);
    return r;
  }
  for (Point x = 0; x < kf.degree(); ++x) {
    ++r.pairs_scanned;
    if (!search_orthogonal_kernel_basis(kf, x, cap, tol)) {
      r.witnesses.push_back({{x}, {}, {}});
    }
  }
  finish(r);
  return r;
}

bool revalidate_witness(const KernelFamily& kf, ConjectureId conjecture, const Witness& witness,
                        std::size_t cap, const Tolerances& tol) {
  const auto& p = witness.points;
  for (auto x : p) {
    if (x >= kf.degree()) return false;
  }
  switch (conjecture) {
    case ConjectureId::PositiveImpliesRelated:
      return p.size() == 2 && positive_counterexample(kf, p[0], p[1], tol);
    case ConjectureId::OrthogonalIffTrivialIntersection: {
      if (p.size() != 2) return false;
      const Subgroup ex = relation_stabilizer(kf, p[0], tol).subgroup;
      const Subgroup ey = relation_stabilizer(kf, p[1], tol).subgroup;
      return orthogonal(kf, p[0], p[1], tol) != subgroup_intersection(ex, ey).is_trivial();
    }
    case ConjectureId::OrthogonalKernelBasis:
      return p.size() == 1 && !search_orthogonal_kernel_basis(kf, p[0], cap, tol);
  }
  return false;
}

std::vector<ConjectureReport> run_conjecture_suite(const std::vector<ConjectureInstance>& instances,
                                                   std::uint64_t seed, const Tolerances& tol) {
  static constexpr ConjectureId kAll[] = {ConjectureId::PositiveImpliesRelated,
                                          ConjectureId::OrthogonalIffTrivialIntersection,
                                          ConjectureId::OrthogonalKernelBasis};
  std::vector<ConjectureReport> out;
  auto inconclusive = [&](const std::string& id, const std::string& why) {
    for (auto c : kAll) {
      ConjectureReport r = blank(c, id, tol);
      r.reason = why;
      out.push_back(std::move(r));
    }
  };
  for (const auto& inst : instances) {
    std::vector<SelectedSubspace> selected;
    try {
      const Decomposition dec = decompose(inst.group, seed, tol);
      selected = select_subspaces(inst.group, dec.parts, inst.selector, tol);
    } catch (const Error& e) {
      inconclusive(inst.instance_id, e.what());
      continue;
    }
    for (const auto& s : selected) {
      const std::string id = inst.instance_id + "/" + s.label;
      try {
        const KernelFamily kf = kernel_family(s.subspace, tol);
        std::vector<ConjectureReport> rows;
        rows.push_back(probe_positive_implies_related(kf, id, tol));
        rows.push_back(probe_orthogonality_conjecture(kf, id, tol));
        rows.push_back(probe_orthogonal_kernel_basis(kf, id, kDefaultBasisSearchCap, tol));
        out.insert(out.end(), rows.begin(), rows.end());
      } catch (const Error& e) {
        inconclusive(id, e.what());
      }
    }
  }
  return out;
}

}  // namespace gkern

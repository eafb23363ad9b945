#include "gkern/relation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <Eigen/Dense>

#include "gkern/error.hpp"

namespace gkern {

namespace {

std::string pair_label(Point x, Point y) {
  return "x=" + std::to_string(x) + " y=" + std::to_string(y);
}

// Columns K_x and K_y are proportional: sigma_2 <= rank * sigma_1.
bool rank_one(const KernelFamily& kf, Point x, Point y, const Tolerances& tol) {
  ComplexMatrix cols(static_cast<Eigen::Index>(kf.degree()), 2);
  cols.col(0) = kf.kernel(x).values;
  cols.col(1) = kf.kernel(y).values;
  Eigen::JacobiSVD<ComplexMatrix> svd(cols);
  const auto& sv = svd.singularValues();
  return sv(0) > 0.0 && sv(1) <= tol.rank * sv(0);
}

void require_transitive(const KernelFamily& kf, const char* what) {
  if (!is_transitive(kf.group())) {
    throw Error(ErrorCode::NonTransitive, std::string(what) + " needs a transitive action");
  }
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::size_t EquivalencePartition::class_of(Point x) const {
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (std::binary_search(classes[i].begin(), classes[i].end(), x)) return i;
  }
  throw Error(ErrorCode::InvalidArgument, "point " + std::to_string(x) + " is in no class");
}

bool related(const KernelFamily& kf, Point x, Point y, const Tolerances& tol) {
  return std::abs(kf.value(x, y)) >= kf.c() * (1.0 - tol.relation);
}

Complex lambda_of(const KernelFamily& kf, Point x, Point y, const Tolerances& tol) {
  if (!related(kf, x, y, tol)) {
    throw Error(ErrorCode::NotRelated, pair_label(x, y) + " are not related");
  }
  const Complex lambda = kf.value(y, x) / kf.c();
  const ComplexMatrix diff = kf.kernel(y).values - lambda * kf.kernel(x).values;
  if (max_abs(diff) > tol.lambda || std::abs(std::abs(lambda) - 1.0) > tol.lambda) {
    throw Error(ErrorCode::IdentityViolation,
                "K_y is not a unimodular multiple of K_x for " + pair_label(x, y));
  }
  return lambda;
}

EquivalencePartition equivalence_partition(const KernelFamily& kf, const Tolerances& tol) {
  const std::size_t n = kf.degree();
  UnionFind uf(n);
  for (Point x = 0; x < n; ++x) {
    for (Point y = x + 1; y < n; ++y) {
      if (related(kf, x, y, tol)) uf.unite(x, y);
    }
  }
  EquivalencePartition out;
  std::vector<std::size_t> slot(n, SIZE_MAX);
  for (Point x = 0; x < n; ++x) {
    const auto root = uf.find(x);
    if (slot[root] == SIZE_MAX) {
      slot[root] = out.classes.size();
      out.classes.emplace_back();
    }
    out.classes[slot[root]].push_back(x);
  }
  for (const auto& cls : out.classes) {
    for (auto x : cls) {
      for (auto y : cls) {
        if (!related(kf, x, y, tol) || !related(kf, y, x, tol)) {
          throw Error(ErrorCode::TransitivityViolation,
                      "numeric relation is not an equivalence at " + pair_label(x, y));
        }
        out.lambda[{x, y}] = lambda_of(kf, x, y, tol);
      }
    }
  }
  return out;
}

RelationStabilizer relation_stabilizer(const KernelFamily& kf, Point x, const Tolerances& tol) {
  const FiniteGroup& g = kf.group();
  std::vector<ElementIndex> members;
  for (ElementIndex a = 0; a < g.order(); ++a) {
    if (related(kf, g.act(a, x), x, tol)) members.push_back(a);
  }
  Subgroup h(g, std::move(members));
  if (!h.is_closed()) {
    throw Error(ErrorCode::ClosureViolation,
                "relation stabilizer of " + std::to_string(x) + " is not a subgroup");
  }
  return {x, std::move(h)};
}

StabilizerTable stabilizer_table(const KernelFamily& kf, const Tolerances& tol) {
  StabilizerTable t{equivalence_partition(kf, tol), {}, {}};
  for (Point x = 0; x < kf.degree(); ++x) {
    t.stabilizers.push_back(relation_stabilizer(kf, x, tol).subgroup);
    t.normalizers.push_back(subgroup_normalizer(kf.group(), t.stabilizers.back()));
  }
  return t;
}

bool SelfNormalizingSummary::consistent() const {
  return std::all_of(at_point.begin(), at_point.end(), [this](bool b) { return b == everywhere; }) &&
         everywhere == equal_stabilizers_imply_related;
}

SelfNormalizingSummary self_normalizing_summary(const KernelFamily& kf, const StabilizerTable& t,
                                                const Tolerances& tol) {
  const std::size_t n = kf.degree();
  SelfNormalizingSummary s;
  s.everywhere = true;
  for (Point x = 0; x < n; ++x) {
    s.at_point.push_back(t.normalizers[x] == t.stabilizers[x]);
    s.everywhere = s.everywhere && s.at_point.back();
  }
  s.equal_stabilizers_imply_related = true;
  for (Point x = 0; x < n; ++x) {
    for (Point y = 0; y < n; ++y) {
      if (t.stabilizers[x] == t.stabilizers[y] && !related(kf, x, y, tol)) {
        s.equal_stabilizers_imply_related = false;
      }
    }
  }
  return s;
}

Report verify_relation_characterizations(const KernelFamily& kf, const Tolerances& tol) {
  Report r;
  r.subject = "relation characterizations";
  auto& agree = r.add("relation.characterizations_agree");
  auto& nontrivial = r.add("relation.distinct_related_pairs");
  auto& equivalence = r.add("relation.equivalence");
  auto& unimodular = r.add("relation.lambda_unimodular", tol.lambda);
  auto& inverse = r.add("relation.lambda_inverse", tol.lambda);

  const std::size_t n = kf.degree();
  const FiniteGroup& g = kf.group();
  const double c = kf.c();

  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
  for (Point x = 0; x < n; ++x) {
    for (Point y = 0; y < n; ++y) rel[x][y] = related(kf, x, y, tol);
  }

  for (Point x = 0; x < n; ++x) {
    for (Point y = 0; y < n; ++y) {
      const bool a = rank_one(kf, x, y, tol);
      bool b = true;
      for (ElementIndex beta = 0; beta < g.order() && b; ++beta) {
        b = rank_one(kf, g.act(beta, x), g.act(beta, y), tol);
      }
      bool same_moduli = true;
      for (Point z = 0; z < n && same_moduli; ++z) {
        same_moduli = std::abs(std::abs(kf.value(z, x)) - std::abs(kf.value(z, y))) <=
                      tol.lambda * c;
      }
      const bool d = rel[x][y];
      std::ostringstream where;
      where << pair_label(x, y) << " a=" << a << " b=" << b << " c=" << same_moduli << " d=" << d;
      agree.expect(a == b && b == same_moduli && same_moduli == d, where.str());
      if (x != y && d) ++nontrivial.exercised;

      if (d) {
        const Complex lxy = kf.value(y, x) / c;
        const double multiple = max_abs(ComplexMatrix(kf.kernel(y).values - lxy * kf.kernel(x).values));
        unimodular.observe(std::max(std::abs(std::abs(lxy) - 1.0), multiple), pair_label(x, y));
        const Complex lyx = kf.value(x, y) / c;
        inverse.observe(std::abs(lxy * lyx - 1.0), pair_label(x, y));
      }
    }
  }

  for (Point x = 0; x < n; ++x) {
    equivalence.expect(rel[x][x], "reflexive x=" + std::to_string(x));
    for (Point y = 0; y < n; ++y) {
      equivalence.expect(rel[x][y] == rel[y][x], "symmetric " + pair_label(x, y));
      if (!rel[x][y]) continue;
      for (Point z = 0; z < n; ++z) {
        if (rel[y][z]) {
          equivalence.expect(rel[x][z], "transitive " + pair_label(x, y) + " z=" + std::to_string(z));
        }
      }
    }
  }
  return r;
}

Report verify_kernel_equality_criterion(const KernelFamily& kf, const Tolerances& tol) {
  Report r;
  r.subject = "kernel equality criterion";
  auto& check = r.add("relation.value_c_iff_equal_kernels");
  const std::size_t n = kf.degree();
  for (Point x = 0; x < n; ++x) {
    for (Point y = 0; y < n; ++y) {
      const bool value_is_c = std::abs(kf.value(x, y) - Complex(kf.c())) <= tol.lambda;
      const bool equal = max_abs(ComplexMatrix(kf.kernel(x).values - kf.kernel(y).values)) <= tol.lambda;
      check.expect(value_is_c == equal, pair_label(x, y));
    }
  }
  return r;
}

Report verify_class_nontriviality(const KernelFamily& kf, const Tolerances& tol) {
  require_transitive(kf, "class nontriviality");
  Report r;
  r.subject = "class nontriviality";
  auto& pointwise = r.add("relation.class_size_iff_stabilizer_size");
  auto& index = r.add("relation.class_size_is_stabilizer_index");
  auto& dichotomy = r.add("relation.all_or_no_singleton_classes");
  auto& uniform = r.add("relation.uniform_class_size");

  const StabilizerTable t = stabilizer_table(kf, tol);
  std::size_t nontrivial_classes = 0;
  for (Point x = 0; x < kf.degree(); ++x) {
    const std::size_t cls = t.partition.classes[t.partition.class_of(x)].size();
    const std::size_t stab = t.stabilizers[x].order();
    const std::size_t fix = point_stabilizer(kf.group(), x).order();
    const std::string where = "x=" + std::to_string(x) + " |[x]|=" + std::to_string(cls) +
                              " |E(x)|=" + std::to_string(stab) + " |G_x|=" + std::to_string(fix);
    // [x] is the E(x)-orbit of x, so |E(x)| = |[x]| |G_x|. The plain
    // biconditional needs g x != x for g != e.
    index.expect(cls * fix == stab, where);
    if (fix == 1) pointwise.expect((cls > 1) == (stab > 1), where);
    if (cls > 1) ++nontrivial_classes;
  }
  dichotomy.expect(nontrivial_classes == 0 || nontrivial_classes == kf.degree(),
                   std::to_string(nontrivial_classes) + " of " + std::to_string(kf.degree()) +
                       " points lie in nontrivial classes");
  for (const auto& cls : t.partition.classes) {
    uniform.expect(cls.size() == t.partition.classes.front().size(),
                   "class of " + std::to_string(cls.front()) + " has size " + std::to_string(cls.size()));
  }
  return r;
}

Report verify_stabilizer_laws(const KernelFamily& kf, const Tolerances& tol) {
  require_transitive(kf, "stabilizer laws");
  Report r;
  r.subject = "relation stabilizer laws";
  auto& closure = r.add("stabilizer.subgroup_closure");
  auto& shared = r.add("stabilizer.related_points_share_stabilizer");
  auto& membership = r.add("stabilizer.membership_transport");
  auto& conjugation = r.add("stabilizer.conjugation_transport");
  auto& inheritance = r.add("stabilizer.containment_inheritance");
  auto& symmetric = r.add("stabilizer.containment_symmetry");

  const FiniteGroup& g = kf.group();
  const std::size_t n = kf.degree();
  const StabilizerTable t = stabilizer_table(kf, tol);
  const auto& e = t.stabilizers;

  for (Point x = 0; x < n; ++x) closure.expect(e[x].is_closed(), "E(" + std::to_string(x) + ")");

  for (Point x = 0; x < n; ++x) {
    for (Point y = 0; y < n; ++y) {
      if (x != y && related(kf, x, y, tol)) shared.expect(e[x] == e[y], pair_label(x, y));
    }
  }

  for (ElementIndex b = 0; b < g.order(); ++b) {
    for (Point x = 0; x < n; ++x) {
      const Point bx = g.act(b, x);
      const std::string where = "beta=" + std::to_string(b) + " x=" + std::to_string(x);
      membership.expect(e[x].contains(b) == e[bx].contains(b), where);
      conjugation.expect(e[bx] == conjugate_subgroup(g, e[x], b), where);
    }
  }

  for (ElementIndex a = 0; a < g.order(); ++a) {
    const ElementIndex a_inv = g.inverse(a);
    for (Point x = 0; x < n; ++x) {
      const Point ax = g.act(a, x);
      const Point a_inv_x = g.act(a_inv, x);
      const std::string where = "alpha=" + std::to_string(a) + " x=" + std::to_string(x);
      const bool contained = e[ax].is_subset_of(e[x]);
      symmetric.expect(contained == e[x].is_subset_of(e[a_inv_x]), where);
      if (!contained) continue;
      for (auto b : e[ax].members()) {
        const ElementIndex b_inv = g.inverse(b);
        const ElementIndex conj = g.conjugate(a, b);
        const ElementIndex comm = g.multiply(conj, b_inv);
        const ElementIndex comm2 = g.multiply(g.multiply(b_inv, a_inv), g.multiply(b, a));
        inheritance.expect(e[ax].contains(conj) && e[ax].contains(comm) && e[x].contains(comm2),
                           where + " beta=" + std::to_string(b));
      }
    }
  }
  return r;
}

Report verify_normalizer_laws(const KernelFamily& kf, const Tolerances& tol) {
  require_transitive(kf, "normalizer laws");
  Report r;
  r.subject = "normalizer laws";
  auto& membership = r.add("normalizer.membership_transport");
  auto& conjugation = r.add("normalizer.conjugation_transport");
  auto& stab_conj = r.add("stabilizer.conjugate_across_points");
  auto& norm_conj = r.add("normalizer.conjugate_across_points");
  auto& fixed = r.add("stabilizer.fixed_iff_normalizes");
  auto& self_norm = r.add("stabilizer.self_normalizing_equivalence");

  const FiniteGroup& g = kf.group();
  const std::size_t n = kf.degree();
  const StabilizerTable t = stabilizer_table(kf, tol);
  const auto& e = t.stabilizers;
  const auto& ne = t.normalizers;

  for (ElementIndex b = 0; b < g.order(); ++b) {
    for (Point x = 0; x < n; ++x) {
      const Point bx = g.act(b, x);
      const std::string where = "beta=" + std::to_string(b) + " x=" + std::to_string(x);
      membership.expect(ne[x].contains(b) == ne[bx].contains(b), where);
      conjugation.expect(ne[bx] == conjugate_subgroup(g, ne[x], b), where);
      fixed.expect((e[bx] == e[x]) == ne[x].contains(b), where);
    }
  }

  for (Point x = 0; x < n; ++x) {
    for (Point y = 0; y < n; ++y) {
      const auto w1 = are_conjugate_subgroups(g, e[x], e[y]);
      stab_conj.expect(w1 && conjugate_subgroup(g, e[x], *w1) == e[y], pair_label(x, y));
      const auto w2 = are_conjugate_subgroups(g, ne[x], ne[y]);
      norm_conj.expect(w2 && conjugate_subgroup(g, ne[x], *w2) == ne[y], pair_label(x, y));
    }
  }

  const SelfNormalizingSummary summary = self_normalizing_summary(kf, t, tol);
  for (Point x = 0; x < n; ++x) {
    std::ostringstream where;
    where << "x=" << x << " self_normalizing_here=" << summary.at_point[x]
          << " self_normalizing_everywhere=" << summary.everywhere
          << " equal_stabilizers_imply_related=" << summary.equal_stabilizers_imply_related;
    self_norm.expect(summary.at_point[x] == summary.everywhere &&
                         summary.everywhere == summary.equal_stabilizers_imply_related,
                     where.str());
  }
  return r;
}

}  // namespace gkern

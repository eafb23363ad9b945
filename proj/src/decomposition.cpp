#include "gkern/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <functional>
#include <sstream>

#include <Eigen/Dense>
#include <openssl/evp.h>

#include "gkern/error.hpp"

namespace gkern {

InvariantSubspace::InvariantSubspace(FiniteGroup group, ComplexMatrix basis,
                                     ComplexMatrix projection)
    : group_(std::move(group)), basis_(std::move(basis)), projection_(std::move(projection)) {
  const auto n = static_cast<Eigen::Index>(group_.degree());
  if (basis_.rows() != n || projection_.rows() != n || projection_.cols() != n) {
    throw Error(ErrorCode::DegreeMismatch, "subspace matrices do not match the group degree");
  }
}

InvariantSubspace InvariantSubspace::from_basis(FiniteGroup group, const ComplexMatrix& spanning) {
  const Eigen::Index n = spanning.rows();
  const Eigen::Index d = spanning.cols();
  Eigen::HouseholderQR<ComplexMatrix> qr(spanning);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, d);
  const ComplexMatrix r = qr.matrixQR().topRows(d).triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < d; ++i) {
    if (std::abs(r(i, i)) <= 1e-10 * std::max(1.0, max_abs(spanning))) {
      throw Error(ErrorCode::InvalidArgument, "spanning vectors are linearly dependent");
    }
  }
  ComplexMatrix p = q * q.adjoint();
  return InvariantSubspace(std::move(group), std::move(q), std::move(p));
}

InvariantSubspace InvariantSubspace::full_space(const FiniteGroup& group) {
  const auto n = static_cast<Eigen::Index>(group.degree());
  return InvariantSubspace(group, ComplexMatrix::Identity(n, n), ComplexMatrix::Identity(n, n));
}

InvariantSubspace InvariantSubspace::constants(const FiniteGroup& group) {
  const auto n = static_cast<Eigen::Index>(group.degree());
  ComplexMatrix b = ComplexMatrix::Constant(n, 1, 1.0 / std::sqrt(static_cast<double>(n)));
  ComplexMatrix p = ComplexMatrix::Constant(n, n, 1.0 / static_cast<double>(n));
  return InvariantSubspace(group, std::move(b), std::move(p));
}

InvariantSubspace InvariantSubspace::with_projection(ComplexMatrix projection) const {
  return InvariantSubspace(group_, basis_, std::move(projection));
}

ComplexMatrix perm_matrix(const Permutation& alpha) {
  const auto n = static_cast<Eigen::Index>(alpha.degree());
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  // (M f)(a y) = f(y)
  for (Eigen::Index y = 0; y < n; ++y) m(static_cast<Eigen::Index>(alpha(static_cast<Point>(y))), y) = 1.0;
  return m;
}

namespace {

// rho(a) A rho(a)^H permutes rows and columns: entry (a i, a j) = A(i, j).
void accumulate_conjugated(const Permutation& alpha, const ComplexMatrix& a, ComplexMatrix& out) {
  const auto n = a.rows();
  for (Eigen::Index j = 0; j < n; ++j) {
    const auto aj = static_cast<Eigen::Index>(alpha(static_cast<Point>(j)));
    for (Eigen::Index i = 0; i < n; ++i) {
      out(static_cast<Eigen::Index>(alpha(static_cast<Point>(i))), aj) += a(i, j);
    }
  }
}

double commutator_defect(const Permutation& alpha, const ComplexMatrix& p) {
  const ComplexMatrix m = perm_matrix(alpha);
  return max_abs(m * p - p * m);
}

}  // namespace

ComplexMatrix commutant_average(const FiniteGroup& g, const ComplexMatrix& a, const Tolerances& tol) {
  if (a.rows() != a.cols() || a.rows() != static_cast<Eigen::Index>(g.degree())) {
    throw Error(ErrorCode::DegreeMismatch, "commutant average needs an n x n matrix");
  }
  if (hermitian_defect(a) > tol.hermitian) {
    throw Error(ErrorCode::NotHermitian, "commutant average input is not Hermitian");
  }
  ComplexMatrix sum = ComplexMatrix::Zero(a.rows(), a.cols());
  for (const auto& alpha : g.elements()) accumulate_conjugated(alpha, a, sum);
  sum /= static_cast<double>(g.order());
  // Exact Hermitian symmetry for the eigensolver.
  return (sum + sum.adjoint()) * 0.5;
}

EigenDecomposition hermitian_eigendecomposition(const ComplexMatrix& b, const Tolerances& tol) {
  if (b.rows() != b.cols()) throw Error(ErrorCode::NotHermitian, "matrix is not square");
  if (hermitian_defect(b) > tol.hermitian) {
    throw Error(ErrorCode::NotHermitian, "eigendecomposition input is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(b);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::ConvergenceFailure, "Hermitian eigensolver did not converge");
  }
  EigenDecomposition out{solver.eigenvalues(), solver.eigenvectors()};
  const ComplexMatrix rebuilt =
      out.vectors * out.values.cast<Complex>().asDiagonal() * out.vectors.adjoint();
  const double err = max_abs(b - rebuilt);
  if (err > tol.eigen_reconstruction) {
    std::ostringstream os;
    os << "reconstruction error " << err << " exceeds " << tol.eigen_reconstruction;
    throw Error(ErrorCode::ConvergenceFailure, os.str());
  }
  return out;
}

ComplexMatrix random_hermitian(std::size_t n, Rng& rng) {
  const auto m = static_cast<Eigen::Index>(n);
  ComplexMatrix a(m, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    for (Eigen::Index i = 0; i < m; ++i) a(i, j) = rng.complex_normal();
  }
  return (a + a.adjoint()) * 0.5;
}

Report certify(const InvariantSubspace& h, const Tolerances& tol) {
  Report r;
  r.subject = "invariant subspace";
  const ComplexMatrix& p = h.projection();
  const ComplexMatrix& b = h.basis();
  const auto d = static_cast<Eigen::Index>(h.dim());

  r.add("subspace.finite_entries").expect(all_finite(p) && all_finite(b), "projection/basis");
  r.add("subspace.projection_hermitian", tol.hermitian).observe(hermitian_defect(p), "P - P^H");
  r.add("subspace.projection_idempotent", tol.idempotent).observe(max_abs(p * p - p), "P P - P");
  auto& inv = r.add("subspace.group_invariance", tol.invariance);
  for (ElementIndex a = 0; a < h.group().order(); ++a) {
    inv.observe(commutator_defect(h.group().element(a), p), "alpha=" + std::to_string(a));
  }
  r.add("subspace.trace_equals_dim", tol.trace)
      .observe(std::abs(p.trace() - Complex(static_cast<double>(d))), "trace(P) - dim");
  r.add("subspace.basis_orthonormal", tol.assertion)
      .observe(max_abs(b.adjoint() * b - ComplexMatrix::Identity(d, d)), "B^H B - I");
  r.add("subspace.projection_from_basis", tol.assertion)
      .observe(max_abs(b * b.adjoint() - p), "B B^H - P");
  return r;
}

namespace {

// Sort key: dimension, then the first column of n P on a 1e-6 grid,
// real parts descending, then imaginary parts descending.
bool canonical_less(const InvariantSubspace& a, const InvariantSubspace& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  const auto n = static_cast<double>(a.degree());
  auto grid = [n](double v) { return std::llround(v * n * 1e6); };
  for (Eigen::Index y = 0; y < a.projection().rows(); ++y) {
    const auto ra = grid(a.projection()(y, 0).real());
    const auto rb = grid(b.projection()(y, 0).real());
    if (ra != rb) return ra > rb;
    const auto ia = grid(a.projection()(y, 0).imag());
    const auto ib = grid(b.projection()(y, 0).imag());
    if (ia != ib) return ia > ib;
  }
  return false;
}

std::optional<std::vector<InvariantSubspace>> try_decompose(const FiniteGroup& g,
                                                            std::uint64_t seed,
                                                            const Tolerances& tol) {
  const std::size_t n = g.degree();
  Rng rng(seed);
  const ComplexMatrix b = commutant_average(g, random_hermitian(n, rng), tol);
  const EigenDecomposition eig = hermitian_eigendecomposition(b, tol);

  const auto m = eig.values.size();
  const double range = m ? eig.values(m - 1) - eig.values(0) : 0.0;
  const double gap = std::max(tol.cluster_gap, tol.cluster_gap * range);

  std::vector<InvariantSubspace> parts;
  Eigen::Index start = 0;
  for (Eigen::Index i = 1; i <= m; ++i) {
    if (i == m || eig.values(i) - eig.values(i - 1) > gap) {
      ComplexMatrix basis = eig.vectors.middleCols(start, i - start);
      ComplexMatrix proj = basis * basis.adjoint();
      InvariantSubspace h(g, std::move(basis), std::move(proj));
      if (!certify(h, tol).passed()) return std::nullopt;
      parts.push_back(std::move(h));
      start = i;
    }
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      if (max_abs(parts[i].projection() * parts[j].projection()) > tol.orthogonal_parts) {
        return std::nullopt;
      }
    }
  }
  std::stable_sort(parts.begin(), parts.end(), canonical_less);
  return parts;
}

}  // namespace

Decomposition decompose(const FiniteGroup& g, std::uint64_t seed, const Tolerances& tol) {
  constexpr std::size_t kMaxResamples = 5;
  Decomposition out;
  out.transitive = is_transitive(g);
  for (std::size_t attempt = 0; attempt <= kMaxResamples; ++attempt) {
    const std::uint64_t s = attempt == 0 ? seed : derive_seed(seed, attempt);
    ++out.attempts;
    if (auto parts = try_decompose(g, s, tol)) {
      out.parts = std::move(*parts);
      return out;
    }
  }
  throw Error(ErrorCode::DecompositionUnstable,
              "no certified decomposition after " + std::to_string(out.attempts) + " samples");
}

bool is_irreducible(const InvariantSubspace& h, std::size_t trials, std::uint64_t seed,
                    const Tolerances& tol) {
  const auto d = static_cast<Eigen::Index>(h.dim());
  if (d <= 1) return true;
  Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const ComplexMatrix avg = commutant_average(h.group(), random_hermitian(h.degree(), rng), tol);
    const ComplexMatrix restricted = h.basis().adjoint() * avg * h.basis();
    const Complex lambda = restricted.trace() / static_cast<double>(d);
    if (max_abs(restricted - lambda * ComplexMatrix::Identity(d, d)) > tol.irreducible) {
      return false;
    }
  }
  return true;
}

InvariantSubspace sum_subspaces(const std::vector<InvariantSubspace>& parts, const Tolerances& tol) {
  if (parts.empty()) throw Error(ErrorCode::InvalidArgument, "sum of no subspaces");
  const FiniteGroup& g = parts.front().group();
  for (const auto& p : parts) {
    if (!p.group().same_group(g)) {
      throw Error(ErrorCode::InvalidArgument, "summing subspaces of different groups");
    }
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      const double overlap = max_abs(parts[i].projection() * parts[j].projection());
      if (overlap > tol.orthogonal_parts) {
        std::ostringstream os;
        os << "parts " << i << " and " << j << " overlap by " << overlap;
        throw Error(ErrorCode::NotOrthogonal, os.str());
      }
    }
  }
  const auto n = static_cast<Eigen::Index>(g.degree());
  Eigen::Index d = 0;
  for (const auto& p : parts) d += static_cast<Eigen::Index>(p.dim());
  ComplexMatrix basis(n, d);
  ComplexMatrix proj = ComplexMatrix::Zero(n, n);
  Eigen::Index col = 0;
  for (const auto& p : parts) {
    basis.middleCols(col, p.basis().cols()) = p.basis();
    col += p.basis().cols();
    proj += p.projection();
  }
  InvariantSubspace out(g, std::move(basis), std::move(proj));
  const Report r = certify(out, tol);
  if (!r.passed()) {
    throw Error(ErrorCode::IdentityViolation, "subspace sum fails " + r.failed_laws().front());
  }
  return out;
}

std::string projection_digest(const InvariantSubspace& h) {
  const ComplexMatrix& p = h.projection();
  std::vector<unsigned char> bytes;
  bytes.reserve(static_cast<std::size_t>(p.size()) * 16);
  auto push = [&bytes](double v) {
    unsigned char buf[sizeof(double)];
    std::memcpy(buf, &v, sizeof v);
    bytes.insert(bytes.end(), buf, buf + sizeof buf);
  };
  for (Eigen::Index i = 0; i < p.rows(); ++i) {
    for (Eigen::Index j = 0; j < p.cols(); ++j) {
      push(p(i, j).real());
      push(p(i, j).imag());
    }
  }
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCode::InvalidArgument, "SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[md[i] >> 4]);
    out.push_back(kHex[md[i] & 0xf]);
  }
  return out;
}

std::string to_string(SubspacePolicy policy) {
  switch (policy) {
    case SubspacePolicy::EachMinimal: return "each-minimal";
    case SubspacePolicy::AllSumsUpToK: return "all-sums-up-to-k";
    case SubspacePolicy::FullSpace: return "full-space";
  }
  return "unknown";
}

SubspacePolicy parse_subspace_policy(const std::string& text) {
  if (text == "each-minimal") return SubspacePolicy::EachMinimal;
  if (text == "all-sums-up-to-k") return SubspacePolicy::AllSumsUpToK;
  if (text == "full-space") return SubspacePolicy::FullSpace;
  throw Error(ErrorCode::InvalidArgument, "unknown subspace policy '" + text + "'");
}

std::vector<SelectedSubspace> select_subspaces(const FiniteGroup& g,
                                               const std::vector<InvariantSubspace>& parts,
                                               const SubspaceSelector& selector,
                                               const Tolerances& tol) {
  std::vector<SelectedSubspace> out;
  switch (selector.policy) {
    case SubspacePolicy::FullSpace:
      out.push_back({"full", {}, InvariantSubspace::full_space(g)});
      break;
    case SubspacePolicy::EachMinimal:
      for (std::size_t i = 0; i < parts.size(); ++i) {
        out.push_back({std::to_string(i), {i}, parts[i]});
      }
      break;
    case SubspacePolicy::AllSumsUpToK: {
      if (selector.k < 1 || selector.k > 4) {
        throw Error(ErrorCode::InvalidArgument, "k must be between 1 and 4");
      }
      std::vector<std::size_t> combo;
      std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t next, std::size_t size) {
        if (combo.size() == size) {
          std::vector<InvariantSubspace> chosen;
          std::string label;
          for (auto id : combo) {
            chosen.push_back(parts[id]);
            if (!label.empty()) label += '+';
            label += std::to_string(id);
          }
          out.push_back({label, combo, sum_subspaces(chosen, tol)});
          return;
        }
        for (std::size_t i = next; i < parts.size(); ++i) {
          combo.push_back(i);
          rec(i + 1, size);
          combo.pop_back();
        }
      };
      for (std::size_t size = 1; size <= selector.k; ++size) rec(0, size);
      break;
    }
  }
  return out;
}

}  // namespace gkern

#include "gkern/serialize.hpp"

#include "gkern/error.hpp"

namespace gkern {

namespace {

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw Error(ErrorCode::ParseError, "expected [re, im], got " + j.dump());
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

ComplexVector vector_from(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "expected an array of [re, im]");
  ComplexVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = complex_from(j[i]);
  return v;
}

}  // namespace

Json to_json(const FunctionOnX& f) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < f.values.size(); ++i) out.push_back(complex_json(f.values(i)));
  return out;
}

FunctionOnX function_from_json(const Json& j) { return FunctionOnX(vector_from(j)); }

Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(complex_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "expected a matrix");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = rows ? static_cast<Eigen::Index>(j[0].size()) : 0;
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const ComplexVector row = vector_from(j[static_cast<std::size_t>(i)]);
    if (row.size() != cols) throw Error(ErrorCode::ParseError, "ragged matrix");
    m.row(i) = row.transpose();
  }
  return m;
}

Json to_json(const InvariantSubspace& h, const std::string& group_ref) {
  Json basis = Json::array();
  for (Eigen::Index k = 0; k < h.basis().cols(); ++k) {
    basis.push_back(to_json(FunctionOnX(h.basis().col(k))));
  }
  return Json{{"group", group_ref},
              {"dim", h.dim()},
              {"basis", std::move(basis)},
              {"projection_sha256", projection_digest(h)}};
}

InvariantSubspace subspace_from_json(const Json& j, const FiniteGroup& group) {
  try {
    const auto& cols = j.at("basis");
    const auto n = static_cast<Eigen::Index>(group.degree());
    ComplexMatrix basis(n, static_cast<Eigen::Index>(cols.size()));
    for (std::size_t k = 0; k < cols.size(); ++k) {
      const ComplexVector v = vector_from(cols[k]);
      if (v.size() != n) throw Error(ErrorCode::ParseError, "basis vector has the wrong length");
      basis.col(static_cast<Eigen::Index>(k)) = v;
    }
    if (j.at("dim").get<std::size_t>() != cols.size()) {
      throw Error(ErrorCode::ParseError, "dim does not match the basis");
    }
    ComplexMatrix p = basis * basis.adjoint();
    return InvariantSubspace(group, std::move(basis), std::move(p));
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

Json to_json(const KernelFamily& kf, bool include_matrix) {
  Json out{{"c", kf.c()},
           {"dim", kf.dim()},
           {"kernel_sha256", projection_digest(InvariantSubspace(kf.group(), kf.subspace().basis(),
                                                                 kf.matrix()))}};
  if (include_matrix) out["matrix"] = matrix_to_json(kf.matrix());
  return out;
}

Json to_json(const EquivalencePartition& p) {
  Json lambda = Json::array();
  for (const auto& [key, value] : p.lambda) {
    lambda.push_back(Json::array({key.first, key.second, value.real(), value.imag()}));
  }
  return Json{{"classes", p.classes}, {"lambda", std::move(lambda)}};
}

EquivalencePartition partition_from_json(const Json& j) {
  try {
    EquivalencePartition p;
    p.classes = j.at("classes").get<std::vector<std::vector<Point>>>();
    for (const auto& row : j.at("lambda")) {
      p.lambda[{row.at(0).get<Point>(), row.at(1).get<Point>()}] =
          Complex(row.at(2).get<double>(), row.at(3).get<double>());
    }
    return p;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

Json to_json(const Subgroup& h) { return Json(h.members()); }

Json to_json(const LawCheck& c) {
  return Json{{"law", c.law},
              {"passed", c.passed},
              {"max_deviation", c.max_deviation},
              {"tolerance", c.tolerance},
              {"exercised", c.exercised},
              {"vacuous", c.vacuous()},
              {"violations", c.violations}};
}

Json to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return Json{{"subject", r.subject}, {"passed", r.passed()}, {"checks", std::move(checks)}};
}

Json to_json(const ConjectureReport& r) {
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) {
    witnesses.push_back(Json{{"points", w.points}, {"values", w.values}, {"subgroup_sizes", w.subgroup_sizes}});
  }
  return Json{{"conjecture", to_string(r.conjecture)},
              {"instance", r.instance_id},
              {"status", to_string(r.status)},
              {"witnesses", std::move(witnesses)},
              {"relation_threshold", r.relation_threshold},
              {"orthogonality_threshold", r.orthogonality_threshold},
              {"pairs_scanned", r.pairs_scanned},
              {"reason", r.reason}};
}

ConjectureReport conjecture_report_from_json(const Json& j) {
  try {
    ConjectureReport r;
    r.conjecture = parse_conjecture_id(j.at("conjecture").get<std::string>());
    r.instance_id = j.at("instance").get<std::string>();
    r.status = parse_conjecture_status(j.at("status").get<std::string>());
    for (const auto& w : j.at("witnesses")) {
      r.witnesses.push_back({w.at("points").get<std::vector<Point>>(),
                             w.at("values").get<std::vector<double>>(),
                             w.at("subgroup_sizes").get<std::vector<std::size_t>>()});
    }
    r.relation_threshold = j.at("relation_threshold").get<double>();
    r.orthogonality_threshold = j.at("orthogonality_threshold").get<double>();
    r.pairs_scanned = j.at("pairs_scanned").get<std::size_t>();
    r.reason = j.at("reason").get<std::string>();
    return r;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace gkern

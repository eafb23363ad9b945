#pragma once

#include <json.hpp>

#include "gkern/conjecture_lab.hpp"
#include "gkern/decomposition.hpp"
#include "gkern/function_space.hpp"
#include "gkern/kernels.hpp"
#include "gkern/relation.hpp"
#include "gkern/report.hpp"

namespace gkern {

using Json = nlohmann::json;

/// [[re, im], ...] in point order.
Json to_json(const FunctionOnX& f);
FunctionOnX function_from_json(const Json& j);

Json matrix_to_json(const ComplexMatrix& m);  // rows of [re, im]
ComplexMatrix matrix_from_json(const Json& j);

/// {group, dim, basis (one [re,im] array per basis vector), projection_sha256}
Json to_json(const InvariantSubspace& h, const std::string& group_ref);
/// Rebuilds the projection from the basis; throws ParseError on bad input.
InvariantSubspace subspace_from_json(const Json& j, const FiniteGroup& group);

/// {c, dim, kernel_sha256[, matrix]}
Json to_json(const KernelFamily& kf, bool include_matrix);

/// {classes, lambda: [[x, y, re, im], ...]}
Json to_json(const EquivalencePartition& p);
EquivalencePartition partition_from_json(const Json& j);

/// Sorted element-index list.
Json to_json(const Subgroup& h);

Json to_json(const LawCheck& c);
Json to_json(const Report& r);

Json to_json(const ConjectureReport& r);
ConjectureReport conjecture_report_from_json(const Json& j);

}  // namespace gkern

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gkern/conjecture_lab.hpp"
#include "gkern/serialize.hpp"

namespace gkern {

struct ExperimentConfig {
  std::vector<std::string> families;         // named keys, e.g. "dihedral:5"
  std::vector<std::string> generator_files;  // text group files
  SubspaceSelector selector;
  std::optional<std::uint64_t> seed;
  Tolerances tolerances;
  std::filesystem::path output_dir = ".";
  bool corrupt_projection = false;  // test hook: P(0,1) += 1e-3 before verification
};

/// {"instances": ["cyclic:4", {"generators": "g.txt"}, ...], "subspace_policy",
///  "k", "seed", "tolerances": {name: value}, "output_dir"}.
/// Throws ParseError or InvalidArgument.
ExperimentConfig config_from_json(const Json& j);

struct LoadedInstance {
  std::string id;  // family key, or "file:<path>"
  FiniteGroup group;
};

/// Families first, then generator files, each in the order given.
std::vector<LoadedInstance> load_instances(const ExperimentConfig& config);
FiniteGroup load_group(const std::string& instance_id);

/// Rebuilds the kernel family named by a conjecture row id
/// "<instance>/<label>" from scratch.
KernelFamily rebuild_kernel_family(const std::string& row_id, std::uint64_t seed,
                                   const Tolerances& tol = default_tolerances());

/// Writes via a temporary file and rename.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

// Exit codes: 0 success, 1 a verified law failed (verify only), 2 bad
// input or any other hard error.
int cmd_decompose(const ExperimentConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const ExperimentConfig& config, std::ostream& out, std::ostream& err);
int cmd_conjectures(const ExperimentConfig& config, std::ostream& out, std::ostream& err);

}  // namespace gkern

#include "gkern/cli.hpp"

#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "gkern/error.hpp"
#include "gkern/function_space.hpp"
#include "gkern/kernels.hpp"
#include "gkern/random.hpp"
#include "gkern/relation.hpp"

namespace gkern {

namespace {

constexpr std::string_view kFilePrefix = "file:";
constexpr std::size_t kLemmaTrials = 4;
constexpr std::size_t kIrreducibleTrials = 3;

std::uint64_t require_seed(const ExperimentConfig& config) {
  if (!config.seed) throw Error(ErrorCode::InvalidArgument, "a --seed is required");
  return *config.seed;
}

void validate(const ExperimentConfig& config) {
  if (config.selector.policy == SubspacePolicy::AllSumsUpToK &&
      (config.selector.k < 1 || config.selector.k > 4)) {
    throw Error(ErrorCode::InvalidArgument,
                "k must lie in 1..4, got " + std::to_string(config.selector.k));
  }
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

// Runs one suite; a hard error becomes a failed law row named after the suite.
void run_suite(Report& into, const std::string& suite, const std::function<Report()>& fn) {
  try {
    into.append(fn());
  } catch (const Error& e) {
    LawCheck& c = into.add(suite);
    c.expect(false, e.what());
  }
}

}  // namespace

ExperimentConfig config_from_json(const Json& j) {
  ExperimentConfig c;
  try {
    if (!j.is_object()) throw Error(ErrorCode::ParseError, "config must be a JSON object");
    for (const auto& inst : j.value("instances", Json::array())) {
      if (inst.is_string()) {
        c.families.push_back(inst.get<std::string>());
      } else if (inst.contains("family")) {
        c.families.push_back(inst.at("family").get<std::string>());
      } else if (inst.contains("generators")) {
        c.generator_files.push_back(inst.at("generators").get<std::string>());
      } else {
        throw Error(ErrorCode::ParseError, "unrecognized instance " + inst.dump());
      }
    }
    if (j.contains("subspace_policy")) {
      c.selector.policy = parse_subspace_policy(j.at("subspace_policy").get<std::string>());
    }
    if (j.contains("k")) c.selector.k = j.at("k").get<std::size_t>();
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    const Json overrides = j.value("tolerances", Json::object());
    for (const auto& [name, value] : overrides.items()) {
      if (!c.tolerances.set(name, value.get<double>())) {
        throw Error(ErrorCode::InvalidArgument, "unknown tolerance '" + name + "'");
      }
    }
    if (j.contains("output_dir")) c.output_dir = j.at("output_dir").get<std::string>();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  validate(c);
  return c;
}

FiniteGroup load_group(const std::string& instance_id) {
  if (instance_id.starts_with(kFilePrefix)) {
    return parse_group_text(read_text(instance_id.substr(kFilePrefix.size())));
  }
  return named_group(instance_id);
}

std::vector<LoadedInstance> load_instances(const ExperimentConfig& config) {
  std::vector<LoadedInstance> out;
  for (const auto& f : config.families) out.push_back({f, load_group(f)});
  for (const auto& p : config.generator_files) {
    const std::string id = std::string(kFilePrefix) + p;
    out.push_back({id, load_group(id)});
  }
  return out;
}

KernelFamily rebuild_kernel_family(const std::string& row_id, std::uint64_t seed,
                                   const Tolerances& tol) {
  const auto slash = row_id.rfind('/');
  if (slash == std::string::npos) {
    throw Error(ErrorCode::ParseError, "row id '" + row_id + "' has no subspace label");
  }
  const FiniteGroup g = load_group(row_id.substr(0, slash));
  const std::string label = row_id.substr(slash + 1);
  if (label == "full") return kernel_family(InvariantSubspace::full_space(g), tol);

  const Decomposition dec = decompose(g, seed, tol);
  std::vector<InvariantSubspace> chosen;
  std::istringstream ss(label);
  for (std::string part; std::getline(ss, part, '+');) {
    std::size_t i = 0;
    try {
      i = std::stoul(part);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad subspace label '" + label + "'");
    }
    if (i >= dec.parts.size()) throw Error(ErrorCode::ParseError, "no part " + part);
    chosen.push_back(dec.parts[i]);
  }
  if (chosen.empty()) throw Error(ErrorCode::ParseError, "empty subspace label");
  return kernel_family(chosen.size() == 1 ? chosen.front() : sum_subspaces(chosen, tol), tol);
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write '" + tmp.string() + "'");
    out << contents;
    if (!out.flush()) throw Error(ErrorCode::InvalidArgument, "short write to '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, path);
}

int cmd_decompose(const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    const std::uint64_t seed = require_seed(config);
    const auto& tol = config.tolerances;
    Json instances = Json::array();
    for (const auto& inst : load_instances(config)) {
      const Decomposition dec = decompose(inst.group, seed, tol);
      Json parts = Json::array();
      std::vector<std::size_t> dims;
      for (std::size_t i = 0; i < dec.parts.size(); ++i) {
        const auto& h = dec.parts[i];
        dims.push_back(h.dim());
        Json p = to_json(h, inst.id);
        p["index"] = i;
        p["certificate"] = to_json(certify(h, tol));
        p["irreducible"] = is_irreducible(h, kIrreducibleTrials, derive_seed(seed, 1000 + i), tol);
        parts.push_back(std::move(p));
      }
      out << inst.id << ": order " << inst.group.order() << ", dims";
      for (auto d : dims) out << ' ' << d;
      out << '\n';
      instances.push_back(Json{{"instance", inst.id},
                               {"degree", inst.group.degree()},
                               {"order", inst.group.order()},
                               {"transitive", dec.transitive},
                               {"attempts", dec.attempts},
                               {"dims", dims},
                               {"subspaces", std::move(parts)}});
    }
    write_file_atomic(config.output_dir / "subspaces.json",
                      Json{{"seed", seed}, {"instances", std::move(instances)}}.dump(2) + "\n");
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

int cmd_verify(const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
  bool all_passed = true;
  try {
    validate(config);
    const std::uint64_t seed = require_seed(config);
    const auto& tol = config.tolerances;
    const auto instances = load_instances(config);
    for (std::size_t i = 0; i < instances.size(); ++i) {
      const auto& inst = instances[i];
      const Decomposition dec = decompose(inst.group, seed, tol);
      const auto selected = select_subspaces(inst.group, dec.parts, config.selector, tol);
      for (std::size_t s = 0; s < selected.size(); ++s) {
        InvariantSubspace h = selected[s].subspace;
        if (config.corrupt_projection && h.degree() > 1) {
          ComplexMatrix p = h.projection();
          p(0, 1) += 1e-3;
          h = h.with_projection(std::move(p));
        }
        const KernelFamily kf = kernel_family_unchecked(h);
        const std::uint64_t sub_seed = derive_seed(seed, (i << 16) + s);

        Report report;
        report.subject = inst.id + "/" + selected[s].label;
        run_suite(report, "function_space.invariance", [&] {
          return verify_invariance_lemma(inst.group, kLemmaTrials, sub_seed, tol);
        });
        run_suite(report, "subspace.certificate", [&] { return certify(h, tol); });
        run_suite(report, "kernel.properties", [&] { return verify_kernel_properties(kf, tol); });
        run_suite(report, "kernel.basic_lemmas", [&] {
          return verify_basic_kernel_lemmas(kf, kLemmaTrials, sub_seed, tol);
        });
        run_suite(report, "relation.characterizations",
                  [&] { return verify_relation_characterizations(kf, tol); });
        run_suite(report, "relation.kernel_equality",
                  [&] { return verify_kernel_equality_criterion(kf, tol); });
        run_suite(report, "relation.class_nontriviality",
                  [&] { return verify_class_nontriviality(kf, tol); });
        run_suite(report, "stabilizer.laws", [&] { return verify_stabilizer_laws(kf, tol); });
        run_suite(report, "normalizer.laws", [&] { return verify_normalizer_laws(kf, tol); });

        Json doc{{"instance", inst.id},
                 {"subspace", selected[s].label},
                 {"parts", selected[s].part_ids},
                 {"kernel", to_json(kf, true)},
                 {"report", to_json(report)}};
        try {
          const StabilizerTable t = stabilizer_table(kf, tol);
          Json stabs = Json::array();
          for (const auto& e : t.stabilizers) stabs.push_back(to_json(e));
          doc["partition"] = to_json(t.partition);
          doc["stabilizers"] = std::move(stabs);
        } catch (const Error&) {
          // already reported as a failing law
        }
        write_file_atomic(config.output_dir /
                              ("verify_" + std::to_string(i) + "_" + std::to_string(s) + ".json"),
                          doc.dump(2) + "\n");

        out << std::left << std::setw(28) << report.subject;
        if (report.passed()) {
          out << "PASS (" << report.checks.size() << " laws)\n";
        } else {
          all_passed = false;
          out << "FAIL";
          for (const auto& law : report.failed_laws()) out << ' ' << law;
          out << '\n';
        }
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return all_passed ? 0 : 1;
}

int cmd_conjectures(const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    const std::uint64_t seed = require_seed(config);
    std::vector<ConjectureInstance> instances;
    for (auto& inst : load_instances(config)) {
      instances.push_back({inst.id, inst.group, config.selector});
    }
    const auto rows = run_conjecture_suite(instances, seed, config.tolerances);
    std::string jsonl;
    std::string csv = "instance,conjecture,status,witness_count\n";
    for (const auto& r : rows) {
      jsonl += to_json(r).dump() + "\n";
      csv += csv_field(r.instance_id) + "," + to_string(r.conjecture) + "," + to_string(r.status) +
             "," + std::to_string(r.witnesses.size()) + "\n";
      out << std::left << std::setw(28) << r.instance_id << std::setw(38) << to_string(r.conjecture)
          << to_string(r.status);
      if (!r.witnesses.empty()) out << " (" << r.witnesses.size() << " witnesses)";
      out << '\n';
    }
    write_file_atomic(config.output_dir / "conjectures.jsonl", jsonl);
    write_file_atomic(config.output_dir / "summary.csv", csv);
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace gkern

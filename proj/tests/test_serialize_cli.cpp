#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gkern/cli.hpp"
#include "gkern/error.hpp"
#include "gkern/relation.hpp"

using namespace gkern;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("gkern_test_" + name);
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ExperimentConfig config(std::vector<std::string> families, const fs::path& out) {
  ExperimentConfig c;
  c.families = std::move(families);
  c.seed = 1;
  c.output_dir = out;
  return c;
}

}  // namespace

TEST(Serialize, FunctionRoundTrip) {
  const FunctionOnX f{Complex(1.5, -2.0), Complex(0.0, 1e-300), Complex(3.25)};
  const auto back = function_from_json(Json::parse(to_json(f).dump()));
  EXPECT_EQ(back.values, f.values);
  EXPECT_THROW(function_from_json(Json::parse("[[1]]")), Error);
}

TEST(Serialize, SubspaceRoundTripKeepsTheProjection) {
  const auto g = named_group("dihedral:4");
  const auto h = decompose(g, 1).parts.back();
  const Json j = to_json(h, "dihedral:4");
  const auto back = subspace_from_json(Json::parse(j.dump()), g);
  EXPECT_EQ(back.dim(), h.dim());
  EXPECT_LT((back.projection() - h.projection()).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_EQ(j.at("projection_sha256").get<std::string>(), projection_digest(h));
}

TEST(Serialize, PartitionRoundTrip) {
  const auto g = named_group("cyclic:4");
  const auto parts = decompose(g, 1).parts;
  const auto kf = kernel_family(sum_subspaces({parts[1], parts[2]}));
  const auto p = equivalence_partition(kf);
  const auto back = partition_from_json(Json::parse(to_json(p).dump()));
  EXPECT_EQ(back.classes, p.classes);
  EXPECT_EQ(back.lambda, p.lambda);
}

TEST(Serialize, ConjectureReportRoundTrip) {
  ConjectureReport r;
  r.conjecture = ConjectureId::OrthogonalIffTrivialIntersection;
  r.instance_id = "cyclic:4/1+2";
  r.status = ConjectureStatus::Counterexample;
  r.witnesses.push_back({{0, 1}, {0.0}, {2}});
  r.relation_threshold = 1e-7;
  r.orthogonality_threshold = 1e-8;
  r.pairs_scanned = 16;
  EXPECT_EQ(conjecture_report_from_json(Json::parse(to_json(r).dump())), r);
}

TEST(Config, ParsesJsonAndRejectsBadValues) {
  const auto c = config_from_json(Json::parse(R"({
    "instances": ["cyclic:4", {"family": "symmetric:3"}, {"generators": "g.txt"}],
    "subspace_policy": "all-sums-up-to-k", "k": 2, "seed": 9,
    "tolerances": {"relation": 1e-6}, "output_dir": "out"})"));
  EXPECT_EQ(c.families, (std::vector<std::string>{"cyclic:4", "symmetric:3"}));
  EXPECT_EQ(c.generator_files, (std::vector<std::string>{"g.txt"}));
  EXPECT_EQ(c.selector.k, 2u);
  EXPECT_EQ(c.seed, 9u);
  EXPECT_DOUBLE_EQ(c.tolerances.relation, 1e-6);
  EXPECT_THROW(config_from_json(Json::parse(R"({"tolerances": {"nope": 1}})")), Error);
  EXPECT_THROW(config_from_json(Json::parse(R"({"subspace_policy": "all-sums-up-to-k", "k": 5})")),
               Error);
}

TEST(Cli, DecomposeWritesInventory) {
  const auto out = scratch("decompose");
  std::ostringstream o, e;
  ASSERT_EQ(cmd_decompose(config({"cyclic:6", "symmetric:3"}, out), o, e), 0) << e.str();
  const Json j = Json::parse(slurp(out / "subspaces.json"));
  EXPECT_EQ(j["instances"][0]["dims"], Json::parse("[1,1,1,1,1,1]"));
  EXPECT_EQ(j["instances"][1]["dims"], Json::parse("[1,2]"));
  EXPECT_TRUE(j["instances"][1]["subspaces"][1]["irreducible"].get<bool>());
  EXPECT_TRUE(j["instances"][1]["subspaces"][1]["certificate"]["passed"].get<bool>());
}

TEST(Cli, InvalidFamilyExitsTwoNamingTheKey) {
  std::ostringstream o, e;
  EXPECT_EQ(cmd_decompose(config({"bogus:3"}, scratch("bad")), o, e), 2);
  EXPECT_NE(e.str().find("bogus:3"), std::string::npos);
}

TEST(Cli, MissingSeedExitsTwo) {
  auto c = config({"cyclic:4"}, scratch("noseed"));
  c.seed.reset();
  std::ostringstream o, e;
  EXPECT_EQ(cmd_verify(c, o, e), 2);
  EXPECT_EQ(cmd_conjectures(c, o, e), 2);
}

TEST(Cli, EmptyInstanceListIsFine) {
  const auto out = scratch("empty");
  std::ostringstream o, e;
  EXPECT_EQ(cmd_verify(config({}, out), o, e), 0);
  EXPECT_EQ(cmd_conjectures(config({}, out), o, e), 0);
  EXPECT_EQ(slurp(out / "conjectures.jsonl"), "");
  EXPECT_EQ(slurp(out / "summary.csv"), "instance,conjecture,status,witness_count\n");
}

TEST(Cli, VerifyWritesOneReportPerSubspace) {
  const auto out = scratch("verify");
  std::ostringstream o, e;
  ASSERT_EQ(cmd_verify(config({"cyclic:4", "dihedral:4"}, out), o, e), 0) << o.str() << e.str();
  EXPECT_TRUE(fs::exists(out / "verify_0_3.json"));
  EXPECT_TRUE(fs::exists(out / "verify_1_2.json"));
  const Json j = Json::parse(slurp(out / "verify_1_2.json"));
  EXPECT_TRUE(j["report"]["passed"].get<bool>());
  // Same cosine kernel as the cyclic pair subspace.
  EXPECT_EQ(partition_from_json(j["partition"]).classes,
            (std::vector<std::vector<Point>>{{0, 2}, {1, 3}}));
}

TEST(Cli, CorruptedProjectionExitsOneAndNamesTheLaw) {
  auto c = config({"cyclic:4"}, scratch("corrupt"));
  c.corrupt_projection = true;
  std::ostringstream o, e;
  EXPECT_EQ(cmd_verify(c, o, e), 1);
  EXPECT_NE(o.str().find("kernel.hermitian_symmetry"), std::string::npos);
}

TEST(Cli, ConjecturesAreByteDeterministicAndRevalidate) {
  auto c = config({"cyclic:4"}, scratch("conj_a"));
  c.selector = {SubspacePolicy::AllSumsUpToK, 2};
  c.seed = 7;
  auto d = c;
  d.output_dir = scratch("conj_b");
  std::ostringstream o, e;
  ASSERT_EQ(cmd_conjectures(c, o, e), 0);
  ASSERT_EQ(cmd_conjectures(d, o, e), 0);
  EXPECT_EQ(slurp(c.output_dir / "conjectures.jsonl"), slurp(d.output_dir / "conjectures.jsonl"));
  EXPECT_EQ(slurp(c.output_dir / "summary.csv"), slurp(d.output_dir / "summary.csv"));

  std::istringstream lines(slurp(c.output_dir / "conjectures.jsonl"));
  std::size_t rows = 0;
  for (std::string line; std::getline(lines, line); ++rows) {
    const auto r = conjecture_report_from_json(Json::parse(line));
    const auto kf = rebuild_kernel_family(r.instance_id, 7);
    for (const auto& w : r.witnesses) EXPECT_TRUE(revalidate_witness(kf, r.conjecture, w));
  }
  EXPECT_EQ(rows, 30u);
}

TEST(Cli, GeneratorFileInstances) {
  const auto dir = scratch("gens");
  fs::create_directories(dir);
  write_file_atomic(dir / "square.txt", "4\n[1,2,3,0]\n[0,3,2,1]\n");
  auto c = config({}, dir / "out");
  c.generator_files = {(dir / "square.txt").string()};
  std::ostringstream o, e;
  ASSERT_EQ(cmd_decompose(c, o, e), 0) << e.str();
  const Json j = Json::parse(slurp(dir / "out" / "subspaces.json"));
  EXPECT_EQ(j["instances"][0]["order"], 8);
}

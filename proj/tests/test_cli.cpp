#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <unistd.h>

#include "posinv/cli.hpp"
#include "test_util.hpp"

using namespace posinv;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, int expect) {
  args.insert(args.begin(), {"--report", "json"});
  Run r = run(args);
  CHECK(r.code == expect);
  return json::parse(r.out);
}

const json* find_check(const json& j, const std::string& name) {
  for (const auto& c : j["checks"]["checks"])
    if (c["check"] == name) return &c;
  return nullptr;
}

std::filesystem::path tmp(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("posinv_cli_" + std::to_string(::getpid()) + "_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(f), {});
}

void write_text(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_CASE("validate") {
  CHECK(run({"validate", testutil::fixture("FIX-E8")}).code == kExitPass);
  json real = run_json({"validate", testutil::fixture("FIX-REAL")}, kExitFail);
  REQUIRE(find_check(real, "alpha_is_conjugation"));
  CHECK((*find_check(real, "alpha_is_conjugation"))["status"] == "fail");

  json d = json::parse(slurp(testutil::fixture("FIX-E8")));
  d["automorphisms"]["s3"] = {"1", "1"};
  auto bad = tmp("bad_auto.json");
  write_text(bad, d.dump());
  json j = run_json({"validate", bad.string()}, kExitFail);
  const json* roots = find_check(j, "automorphism_roots");
  REQUIRE(roots);
  CHECK((*roots)["status"] == "fail");
  CHECK_FALSE((*roots)["witnesses"].empty());

  d = json::parse(slurp(testutil::fixture("FIX-E8")));
  d["min_poly"][0] = "1/0";
  write_text(bad, d.dump());
  Run r = run({"validate", bad.string()});
  CHECK(r.code == kExitInput);
  CHECK(r.err.find("error (input)") != std::string::npos);
  std::filesystem::remove(bad);

  CHECK(run({"validate", "/nonexistent/algebra.json"}).code == kExitInput);
  CHECK(run({"frobnicate"}).code == kExitInput);
  CHECK(run({"validate"}).code == kExitInput);
}

TEST_CASE("involution") {
  Run e8 = run({"involution", testutil::fixture("FIX-E8")});
  CHECK(e8.code == kExitPass);
  CHECK(e8.out.find("e_s5") != std::string::npos);
  json s3 = run_json({"involution", testutil::fixture("FIX-S3")}, kExitFail);
  const json* am = find_check(s3, "anti_multiplicative");
  REQUIRE(am);
  CHECK((*am)["status"] == "fail");
  REQUIRE_FALSE((*am)["witnesses"].empty());
  CHECK((*am)["witnesses"][0].contains("a_index"));
  CHECK((*am)["witnesses"][0].contains("b_index"));
}

TEST_CASE("positivity") {
  json e8 = run_json({"positivity", testutil::fixture("FIX-E8"), "--method", "both"}, kExitPass);
  REQUIRE(find_check(e8, "methods_agree"));
  CHECK((*find_check(e8, "trace_form_positive"))["details"]["definiteness"]["signature"] == json({8, 0}));
  CHECK(run({"positivity", testutil::fixture("FIX-TRIV")}).code == kExitPass);
  json real = run_json({"positivity", testutil::fixture("FIX-REAL"), "--method", "trace-form"}, kExitFail);
  CHECK((*find_check(real, "trace_form_positive"))["details"]["definiteness"]["signature"] == json({1, 1}));
  CHECK(run({"positivity", testutil::fixture("FIX-E8"), "--method", "guess"}).code == kExitInput);
}

TEST_CASE("theorems") {
  for (const char* name : {"FIX-E8", "FIX-S3", "FIX-REAL"}) {
    json j = run_json({"theorems", testutil::fixture(name)}, kExitPass);
    CHECK(j["info"]["theorems"].size() == 5);
  }
}

TEST_CASE("codebook") {
  json triv = run_json({"codebook", testutil::fixture("FIX-TRIV"), "--size", "4"}, kExitPass);
  const json* fd = find_check(triv, "fully_diverse");
  REQUIRE(fd);
  std::string lo = (*fd)["details"]["diversity_product"][0];
  CHECK(std::stod(lo) == doctest::Approx(1.41421356));

  CHECK(run({"codebook", testutil::fixture("FIX-TRIV"), "--size", "1"}).code == kExitInput);
  CHECK(run({"codebook", testutil::fixture("FIX-TRIV"), "--strategy", "greedy"}).code == kExitInput);

  auto a = tmp("a.json"), b = tmp("b.json"), csv = tmp("a.csv");
  std::vector<std::string> args = {"codebook", testutil::fixture("FIX-E8-DIV"), "--size", "16", "--strategy", "mixed",
                                   "--seed", "5"};
  auto with = [&](std::initializer_list<std::string> extra) {
    std::vector<std::string> v = args;
    v.insert(v.end(), extra);
    return v;
  };
  CHECK(run(with({"--out", a.string(), "--csv", csv.string()})).code == kExitPass);
  CHECK(run(with({"--out", b.string()})).code == kExitPass);
  REQUIRE(std::filesystem::exists(a));
  CHECK(slurp(a) == slurp(b));
  json ex = json::parse(slurp(a));
  CHECK(ex["codewords"].size() == 16);
  CHECK(ex["metadata"]["strategy"] == "mixed");
  CHECK(slurp(csv).rfind("index,", 0) == 0);
  for (const auto& p : {a, b, csv}) std::filesystem::remove(p);

  CHECK(run(with({"--out", "/nonexistent/dir/cb.json"})).code == kExitInput);

  Run s3 = run({"codebook", testutil::fixture("FIX-S3")});
  CHECK(s3.code == kExitFail);
}

TEST_CASE("environment overrides") {
  ::setenv("POSINV_REPORT", "json", 1);
  ::setenv("POSINV_PRECISION_BITS", "192", 1);
  Run r = run({"positivity", testutil::fixture("FIX-TRIV"), "--method", "trace-form"});
  ::unsetenv("POSINV_REPORT");
  ::unsetenv("POSINV_PRECISION_BITS");
  CHECK(r.code == kExitPass);
  json j = json::parse(r.out);
  CHECK((*find_check(j, "trace_form_positive"))["precision_used"].get<unsigned>() >= 192);
}

TEST_CASE("precision exhaustion") {
  Run r = run({"--precision-bits", "8", "--max-precision-bits", "8", "validate", testutil::fixture("FIX-E8")});
  CHECK(r.code == kExitPrecision);
  CHECK(r.err.find("error (precision)") != std::string::npos);
  CHECK(run({"--precision-bits", "256", "--max-precision-bits", "64", "validate", testutil::fixture("FIX-E8")}).code ==
        kExitInput);
}

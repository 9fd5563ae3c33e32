#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

using json = nlohmann::json;
namespace cli = awarekit::cli;

namespace {

std::string fixture(const std::string& name) { return std::string(AWAREKIT_FIXTURES) + "/" + name; }

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& budget = {}) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err, budget);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), "--json");
  Result r = run(std::move(args));
  return json::parse(r.out);
}

}  // namespace

TEST(Check, Example1Concept) {
  Result r = run({"check", fixture("ex1.json"), "--state", "w1", "--formula", "QC(d_cmp)"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("w1: true"), std::string::npos);
  EXPECT_NE(r.out.find("in language: yes"), std::string::npos);
}

TEST(Check, Example2Unaware) {
  Result r = run({"check", fixture("ex2.json"), "--state", "w1", "--formula", "A 1 Q(d_cmp)"});
  EXPECT_EQ(r.code, cli::kNegative);
  json j = run_json({"check", fixture("ex2.json"), "--state", "w1", "--formula", "A 1 Q(d_cmp)"});
  EXPECT_EQ(j["verdict"], false);
  EXPECT_EQ(j["aware"]["1"], false);
}

TEST(Check, MalformedFormula) {
  Result r = run({"check", fixture("ex1.json"), "--state", "w1", "--formula", "P(d_cmp) & & Q(d_cmp)"});
  EXPECT_EQ(r.code, cli::kError);
  EXPECT_NE(r.err.find("offset"), std::string::npos);
  json j = run_json({"check", fixture("ex1.json"), "--state", "w1", "--formula", "P(d_cmp) &"});
  EXPECT_EQ(j["error"]["code"], "SyntaxError");
}

TEST(Check, FormulaFile) {
  auto path = std::filesystem::temp_directory_path() / "awarekit_cli_formula.txt";
  {
    std::ofstream f(path);
    f << "K 1 R(d_$)\n";
  }
  Result r = run({"check", fixture("ex2.json"), "--state", "w1", "--formula-file", path.string()});
  EXPECT_EQ(r.code, cli::kOk);
  std::filesystem::remove(path);
  EXPECT_EQ(run({"check", fixture("ex2.json"), "--state", "w1"}).code, cli::kError);
  EXPECT_EQ(run({"check", fixture("ex2.json"), "--state", "w9", "--formula", "R(d_$)"}).code, cli::kError);
}

TEST(Validate, Fixtures) {
  EXPECT_EQ(run({"validate", fixture("ex1.json")}).code, cli::kOk);
  EXPECT_EQ(run({"validate", fixture("missing.json")}).code, cli::kError);
}

TEST(Audit, Examples) {
  json j = run_json({"audit", fixture("ex2.json")});
  EXPECT_EQ(j["assumptions"]["A1"]["ok"], true);
  EXPECT_EQ(j["assumptions"]["A2"]["ok"], true);
  EXPECT_EQ(j["assumptions"]["A3"]["ok"], false);
  EXPECT_EQ(j["assumptions"]["A3"]["witness"]["w1"], "w1");
  EXPECT_EQ(run({"audit", fixture("ex2.json")}).code, cli::kNegative);
  EXPECT_EQ(run({"audit", fixture("ex1.json")}).code, cli::kOk);
  Result none = run({"--json", "audit", fixture("ex1_no_utilities.json")});
  EXPECT_EQ(none.code, cli::kError);
  EXPECT_EQ(json::parse(none.out)["error"]["code"], "NoEconomy");
}

TEST(Contract, VerifyExample1) {
  Result r = run({"contract", "verify", fixture("ex1.json"), "--contract", fixture("q_contract.json"), "--at", "w1"});
  EXPECT_EQ(r.code, cli::kOk) << r.out << r.err;
  json j = run_json({"contract", "verify", fixture("ex2.json"), "--contract-path", fixture("q_contract.json"),
                     "--at", "w1"});
  EXPECT_EQ(j["checks"]["articulable"]["ok"], false);
}

TEST(Contract, SynthesizeExample2) {
  auto path = std::filesystem::temp_directory_path() / "awarekit_cli_contract.json";
  Result r = run({"contract", "synthesize", fixture("ex2.json"), "--at", "w1", "--out", path.string()});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  Result v = run({"contract", "verify", fixture("ex2.json"), "--contract", path.string(), "--at", "w1"});
  EXPECT_EQ(v.code, cli::kOk) << v.out;
  EXPECT_NE(v.out.find("outcome at w1: (d_cmp, d_$)"), std::string::npos) << v.out;
  std::filesystem::remove(path);
}

TEST(Contract, SynthesizeExample4Fails) {
  for (auto w : {"w1", "w2", "w3"}) {
    Result r = run({"contract", "synthesize", fixture("ex4.json"), "--at", w});
    EXPECT_EQ(r.code, cli::kError);
    EXPECT_NE(r.err.find("AwarenessMismatch"), std::string::npos);
  }
  EXPECT_EQ(run({"contract", "synthesize", fixture("ex2.json"), "--at", "w1", "--mode", "nope"}).code, cli::kError);
}

TEST(Prove, Corpus) {
  Result ok = run({"prove", fixture("proofs/golden_ka_equivalence.json"), "--sig", fixture("sig.json")});
  EXPECT_EQ(ok.code, cli::kOk);
  json bad = run_json({"prove", fixture("proofs/mutant_ka_equivalence_line5.json"), "--sig-path",
                       fixture("sig.json")});
  EXPECT_EQ(bad["line"], 5);
  Result fin = run({"prove", fixture("proofs/golden_concept_and_finite_domain.json"), "--sig",
                 fixture("sig_infinite.json")});
  EXPECT_EQ(fin.code, cli::kNegative);
  EXPECT_NE(fin.out.find("FinRequiresFiniteObjects"), std::string::npos);
}

TEST(Oracle, Distinguish) {
  Result r = run({"oracle", "distinguish", fixture("ex2.json"), "--states", "w1", "w3"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("P(d_cmp)"), std::string::npos);
  EXPECT_EQ(run({"oracle", "distinguish", fixture("ex4.json"), "--states", "w1", "w2"}).code, cli::kNegative);
}

TEST(Oracle, SearchExample4) {
  EXPECT_EQ(run({"oracle", "search", fixture("ex4.json"), "--at", "w2"}).code, cli::kNegative);
  EXPECT_EQ(run({"oracle", "search", fixture("ex2.json"), "--at", "w1"}).code, cli::kOk);
}

TEST(Budget, EnvironmentOverride) {
  std::vector<std::string> args{"oracle", "distinguish", fixture("ex2.json"), "--states", "w1", "w3"};
  EXPECT_EQ(run(args, "size=0").code, cli::kNegative);
  EXPECT_EQ(run(args, "size=bogus").code, cli::kError);
  EXPECT_EQ(run(args, "colour=3").code, cli::kError);
}

TEST(Report, Deterministic) {
  std::vector<std::string> args{"--json", "contract", "synthesize", fixture("ex2.json"), "--at", "w1"};
  EXPECT_EQ(run(args).out, run(args).out);
  std::vector<std::string> audit{"--json", "audit", fixture("ex2.json")};
  EXPECT_EQ(run(audit).out, run(audit).out);
}

TEST(Report, JsonAgreesWithText) {
  for (auto w : {"w1", "w2", "w3"}) {
    std::vector<std::string> args{"check", fixture("ex1.json"), "--state", w, "--formula", "Q(d_cmp)"};
    Result text = run(args);
    json j = run_json(args);
    EXPECT_EQ(j["verdict"].get<bool>(), text.code == cli::kOk);
  }
}

TEST(Usage, Errors) {
  EXPECT_EQ(run({}).code, cli::kError);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kError);
}

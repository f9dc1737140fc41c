// Copyright 2026 The bornlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bornlab/cli.hpp"

using namespace bornlab;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name) {
  return fs::temp_directory_path() / ("bornlab_test_" + name);
}

}  // namespace

TEST(CliParse, Bloch) {
  EXPECT_EQ(cli::parse_bloch("0,0,1"), BlochVector(0, 0, 1));
  EXPECT_EQ(cli::parse_bloch(" 0.6, 0 ,0.8"), BlochVector(0.6, 0, 0.8));
  EXPECT_THROW(cli::parse_bloch("0,0"), ValidationError);
  EXPECT_THROW(cli::parse_bloch("0,,1"), ValidationError);
  EXPECT_THROW(cli::parse_bloch("a,b,c"), ValidationError);
  EXPECT_THROW(cli::parse_bloch("0,0,nan"), ValidationError);
}

TEST(CliParse, Target) {
  EXPECT_EQ(cli::parse_target("born").kind, cli::CheckTarget::Kind::Born);
  const auto g = cli::parse_target("gudder:1,0.5,0,0,0.5");
  EXPECT_EQ(g.kind, cli::CheckTarget::Kind::Gudder);
  EXPECT_EQ(g.gudder.c, 1.0);
  EXPECT_EQ(cli::parse_target("counterexample:5").power, 5);
  EXPECT_EQ(cli::parse_target("counterexample").power, 3);
  EXPECT_THROW(cli::parse_target("counterexample:4"), ValidationError);
  EXPECT_THROW(cli::parse_target("gudder:1,2"), ValidationError);
  EXPECT_THROW(cli::parse_target("gudder"), ValidationError);
  EXPECT_THROW(cli::parse_target("hall"), ValidationError);
}

TEST(CliParse, Generator) {
  const auto b = cli::parse_generator("born:1,0,0@slice+anchor");
  EXPECT_EQ(b.kind, cli::GeneratorSpec::Kind::Born);
  EXPECT_EQ(b.support, cli::GeneratorSpec::Support::SliceWithAnchor);
  EXPECT_EQ(b.axis, BlochVector(1, 0, 0));
  const auto o = cli::parse_generator("oddpower:5,1,0,0");
  EXPECT_EQ(o.power, 5);
  EXPECT_EQ(o.support, cli::GeneratorSpec::Support::Slice);
  EXPECT_THROW(cli::parse_generator("oddpower:3@general"), ValidationError);
  EXPECT_THROW(cli::parse_generator("born:0,0,2"), ValidationError);
  EXPECT_THROW(cli::parse_generator("born@sphere"), ValidationError);
  EXPECT_THROW(cli::parse_generator("gudder:1,0,0,0,0@slice+anchor"), ValidationError);
}

TEST(CliGenerate, AnchorAppendsOffSlicePoint) {
  const auto s = cli::generate_samples(cli::parse_generator("born@slice+anchor"), 10, 1);
  ASSERT_EQ(s.size(), 11u);
  EXPECT_EQ(s.back().r, FourVector(-1, 0, 0, 1));
  EXPECT_EQ(s.back().value, 0.0);
}

TEST(CliDerive, Examples) {
  const Result z = run({"derive", "--bloch", "0,0,1"});
  ASSERT_EQ(z.code, 0) << z.err;
  const Json jz = z.json();
  EXPECT_EQ(jz["result"]["c"], 0.0);
  EXPECT_EQ(jz["result"]["k"], Json::parse("[0.5,0,0,0.5]"));
  EXPECT_EQ(jz["tool"], "bornlab");
  EXPECT_EQ(jz["version"], cli::version());

  EXPECT_EQ(run({"derive", "--bloch", "0,0,2"}).code, 2);
  EXPECT_EQ(run({"derive", "--bloch", "1,0,0"}).json()["result"]["k"],
            Json::parse("[0.5,0.5,0,0]"));
  EXPECT_EQ(run({"derive"}).code, 2);
}

TEST(CliProb, Examples) {
  auto prob = [](const char* state, const char* proj) {
    const Result r = run({"prob", "--state", state, "--proj", proj});
    EXPECT_EQ(r.code, 0) << r.err;
    return r.json()["result"];
  };
  EXPECT_EQ(prob("0,0,1", "0,0,1")["probability"], 1.0);
  EXPECT_EQ(prob("0,0,1", "1,0,0")["probability"], 0.5);
  EXPECT_EQ(prob("0,0,1", "0,0,-1")["probability"], 0.0);
  EXPECT_LT(prob("0.6,0,0.8", "0,1,0")["max_form_defect"].get<double>(), 1e-12);
  EXPECT_EQ(run({"prob", "--state", "0,0,1", "--proj", "0,0,0"}).code, 2);
}

TEST(CliCheck, BornPasses) {
  const Result r = run({"check", "--target", "born", "--samples", "10000", "--seed", "1"});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  const Json j = r.json();
  EXPECT_TRUE(j["result"]["all_ok"].get<bool>());
  EXPECT_EQ(j["result"]["suites"].size(), 4u);
}

TEST(CliCheck, CounterexampleExpectedOutcome) {
  const Result r = run({"check", "--target", "counterexample:3", "--samples", "10000"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json suites = r.json()["result"]["suites"];
  EXPECT_EQ(suites[0]["name"], "lattice_axioms");
  EXPECT_EQ(suites[0]["observed"], "pass");
  EXPECT_EQ(suites[1]["observed"], "NonGudder");
}

TEST(CliCheck, GudderTarget) {
  const Result r = run({"check", "--target", "gudder:1.5,0.2,-0.3,0.1,0.4", "--samples", "500"});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  const Json suites = r.json()["result"]["suites"];
  EXPECT_EQ(suites[1]["expected"], "fail");
  EXPECT_EQ(suites[1]["observed"], "fail");
  EXPECT_EQ(suites[2]["observed"], "GudderQuadratic");
}

TEST(CliCheck, ExpectationFailureExitsThree) {
  // An absurdly tight tolerance makes the additivity suites miss.
  const Result r = run({"check", "--target", "gudder:3,1,1,1,1", "--samples", "200",
                        "--tol", "1e-300"});
  EXPECT_EQ(r.code, 3);
}

TEST(CliCheck, ConfigValidation) {
  EXPECT_EQ(run({"check", "--samples", "0"}).code, 2);
  EXPECT_EQ(run({"check", "--samples", "-3"}).code, 2);
  EXPECT_EQ(run({"check", "--tol", "0"}).code, 2);
  EXPECT_EQ(run({"check", "--target", "gudder:x"}).code, 2);
  EXPECT_EQ(run({"check", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"check", "--seed", "abc"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
}

TEST(CliFit, GeneratedBorn) {
  const Result r = run({"fit", "--generate", "born:0,0,1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json res = r.json()["result"];
  EXPECT_EQ(res["verdict"], "BornLinear");
  EXPECT_EQ(res["design_rank"], 5);
  const Hermitian2 rho = hermitian_from_json(res["rho_hat"]["rho"]);
  EXPECT_LT((rho.matrix() - projector_from_bloch({0, 0, 1}).matrix()).cwiseAbs().maxCoeff(),
            1e-9);
}

TEST(CliFit, SliceOnlyReportsRankFour) {
  const Result r = run({"fit", "--generate", "born@slice"});
  ASSERT_EQ(r.code, 0);
  const Json res = r.json()["result"];
  EXPECT_EQ(res["design_rank"], 4);
  EXPECT_NE(res["identifiable_note"].get<std::string>().find("2c + k0"), std::string::npos);
}

TEST(CliFit, OddPowerAndExpect) {
  const Result r = run({"fit", "--generate", "oddpower:3", "--samples", "2000"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["result"]["verdict"], "NonGudder");
  EXPECT_EQ(run({"fit", "--generate", "oddpower:3", "--expect", "linear"}).code, 3);
  EXPECT_EQ(run({"fit", "--generate", "oddpower:3", "--expect", "nongudder"}).code, 0);
  EXPECT_EQ(run({"fit", "--generate", "born", "--expect", "linear"}).code, 0);
  EXPECT_EQ(run({"fit", "--generate", "gudder:1,0,0,0,0", "--expect", "born"}).code, 3);
  EXPECT_EQ(run({"fit", "--generate", "born", "--expect", "maybe"}).code, 2);
}

TEST(CliFit, InputFiles) {
  const fs::path json_path = temp_file("samples.json");
  const fs::path csv_path = temp_file("samples.csv");
  ASSERT_EQ(run({"sample", "--generate", "born:1,0,0", "--samples", "50", "--out",
                 json_path.string()}).code, 0);
  ASSERT_EQ(run({"sample", "--generate", "born:1,0,0", "--samples", "50", "--format", "csv",
                 "--out", csv_path.string()}).code, 0);
  const Result a = run({"fit", "--in", json_path.string()});
  const Result b = run({"fit", "--in", csv_path.string()});
  ASSERT_EQ(a.code, 0) << a.err;
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_EQ(a.json()["result"], b.json()["result"]);
  EXPECT_EQ(a.json()["result"]["verdict"], "BornLinear");

  const fs::path bad = temp_file("bad.json");
  std::ofstream(bad) << "[{\"r\": [1, 2], \"value\": 3}]";
  EXPECT_EQ(run({"fit", "--in", bad.string()}).code, 2);
  std::ofstream(bad) << "{ not json";
  EXPECT_EQ(run({"fit", "--in", bad.string()}).code, 2);
  std::ofstream(bad) << "\x01\x02garbage";
  EXPECT_EQ(run({"fit", "--in", bad.string()}).code, 2);
  EXPECT_EQ(run({"fit", "--in", temp_file("missing.json").string()}).code, 2);
  EXPECT_EQ(run({"fit"}).code, 2);
  EXPECT_EQ(run({"fit", "--in", json_path.string(), "--generate", "born"}).code, 2);
  fs::remove(json_path);
  fs::remove(csv_path);
  fs::remove(bad);
}

TEST(CliFit, TooFewSamplesIsUsageError) {
  EXPECT_EQ(run({"fit", "--generate", "born", "--samples", "3"}).code, 2);
}

TEST(CliOutput, CsvReportAndOutFile) {
  const Result r = run({"derive", "--bloch", "0,0,1", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("key,value\n", 0), 0u);
  EXPECT_NE(r.out.find("result.k.0,0.5"), std::string::npos);

  const fs::path path = temp_file("derive.json");
  const Result w = run({"derive", "--bloch", "0,0,1", "--out", path.string()});
  ASSERT_EQ(w.code, 0);
  EXPECT_TRUE(w.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(Json::parse(buf.str())["result"]["k0"], 0.5);
  fs::remove(path);
}

TEST(CliDeterminism, SameSeedSameBytes) {
  const std::vector<std::string> args{"check", "--target", "born", "--samples", "2000",
                                      "--seed", "99"};
  EXPECT_EQ(run(args).out, run(args).out);
  const std::vector<std::string> other{"check", "--target", "born", "--samples", "2000",
                                       "--seed", "100"};
  EXPECT_NE(run(args).out, run(other).out);
}

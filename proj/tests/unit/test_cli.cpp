#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "toric/cli.hpp"
#include "toric/json_io.hpp"

using namespace toric;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

const char* kRationalTheta = R"([["rat",[1,1]],["rat",[7,5]],["rat",[11,5]]])";

std::string tribonacci_theta() {
  const std::string alg = R"({"poly":[-1,-1,-1,1],"lo":[1,1],"hi":[2,1]})";
  return "[1, {\"alg\":" + alg.substr(0, alg.size() - 1) + R"(,"coeffs":[[0,1],[-1,1],[1,1]]}}, {"alg":)" + alg + "}]";
}

std::string write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("toric_cli_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

std::size_t node_lines(const std::string& dot) {
  std::istringstream in(dot);
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);) {
    if (line.find('[') != std::string::npos && line.find("->") == std::string::npos) ++n;
  }
  return n;
}

}  // namespace

TEST(CliExpand, RationalTerminates) {
  auto r = run({"expand", "--theta", kRationalTheta, "--depth", "10"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["tail"]["kind"], "terminated");
  EXPECT_EQ(j["blocks"], Json::parse("[[1,2],[0,2],[1,2]]"));
  EXPECT_EQ(r.out.back(), '\n');
}

TEST(CliExpand, DepthZero) {
  auto r = run({"expand", "--theta", kRationalTheta, "--depth", "0"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(Json::parse(r.out)["blocks"], Json::array());
}

TEST(CliExpand, TribonacciIsPeriodic) {
  auto r = run({"expand", "--theta", tribonacci_theta(), "--depth", "5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["tail"]["kind"], "periodic");
  EXPECT_EQ(j["tail"]["period"], Json::parse("[[1,1]]"));
  auto text = run({"expand", "--theta", tribonacci_theta(), "--depth", "3", "--format", "text"});
  EXPECT_NE(text.out.find("preperiod 0, period (1,1)"), std::string::npos);
}

TEST(CliExpand, MalformedJson) {
  auto r = run({"expand", "--theta", "[1, 2"});
  EXPECT_EQ(r.code, kExitInvalid);
  Json e = Json::parse(r.err);
  EXPECT_EQ(e["error"]["kind"], "ParseError");
  EXPECT_TRUE(e["error"].contains("position"));
  EXPECT_TRUE(r.out.empty());
}

TEST(CliExpand, InvalidInputs) {
  EXPECT_EQ(run({"expand", "--theta", "[1, -2]"}).code, kExitInvalid);
  EXPECT_EQ(run({"expand", "--theta", "[1, 1.5]"}).code, kExitInvalid);
  EXPECT_EQ(run({"expand"}).code, kExitInvalid);
  EXPECT_EQ(run({"expand", "--theta", tribonacci_theta(), "--mode", "rational"}).code, kExitInvalid);
  EXPECT_EQ(run({"expand", "--theta", kRationalTheta, "--mode", "fuzzy"}).code, kExitInvalid);
}

TEST(CliExpand, IndeterminateArithmetic) {
  auto r = run({"expand", "--mode", "interval", "--theta", R"([1, ["ivl", {"lo":[9,10],"hi":[11,10]}]])"});
  EXPECT_EQ(r.code, kExitIndeterminate);
  EXPECT_EQ(Json::parse(r.err)["error"]["kind"], "IndeterminateFloor");
  // Decimals become intervals in interval mode; a wide one cannot be expanded far.
  auto d = run({"expand", "--mode", "interval", "--theta", R"([1, "1.0"])"});
  EXPECT_EQ(d.code, kExitIndeterminate);
}

TEST(CliExpand, BatchIsOrderedAndParallelSafe) {
  std::string batch = "[";
  for (int i = 1; i <= 12; ++i) {
    batch += (i > 1 ? "," : "") + std::string("[1,\"") + std::to_string(100 + i) + "/" + std::to_string(7 + i) + "\",\"" +
             std::to_string(3 * i + 1) + "/5\"]";
  }
  batch += "]";
  auto one = run({"expand", "--theta", batch, "--jobs", "1", "--depth", "40"});
  auto four = run({"expand", "--theta", batch, "--jobs", "4", "--depth", "40"});
  ASSERT_EQ(one.code, kExitOk) << one.err;
  EXPECT_EQ(one.out, four.out);
  Json arr = Json::parse(one.out);
  ASSERT_EQ(arr.size(), 12u);
  auto single = run({"expand", "--theta", "[1,\"105/12\",\"16/5\"]", "--depth", "40"});
  EXPECT_EQ(arr[4], Json::parse(single.out));
}

TEST(CliBratteli, CompareText) {
  const std::string a = R"({"rank":3,"blocks":[],"tail":{"kind":"periodic","preperiod":0,"period":[[1,1],[0,2]]}})";
  const std::string b = R"({"rank":3,"blocks":[[4,4]],"tail":{"kind":"periodic","preperiod":1,"period":[[1,1],[0,2]]}})";
  auto r = run({"bratteli", "--compare", a, b, "--format", "text"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "equivalent, offsets 0/1\n");

  const std::string ones = R"({"rank":3,"blocks":[],"tail":{"kind":"periodic","preperiod":0,"period":[[1,1]]}})";
  const std::string twos = R"({"rank":3,"blocks":[],"tail":{"kind":"periodic","preperiod":0,"period":[[1,2]]}})";
  auto n = run({"bratteli", "--compare", ones, twos, "--format", "text"});
  EXPECT_EQ(n.out, "not equivalent\n");
  auto j = run({"bratteli", "--compare", ones, twos});
  EXPECT_EQ(Json::parse(j.out)["verdict"], "not-equivalent");
}

TEST(CliBratteli, DotFromExpansion) {
  const std::string e = R"({"rank":3,"blocks":[[1,2]],"tail":{"kind":"truncated"}})";
  auto r = run({"bratteli", "--theta", e, "--format", "dot"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(node_lines(r.out), 7u);
  EXPECT_NE(r.out.find("v1_3 -> v2_3 [label=\"2\"];"), std::string::npos);
}

TEST(CliBratteli, StationaryFlag) {
  auto r = run({"bratteli", "--theta", tribonacci_theta(), "--depth", "4", "--stationary"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["diagram"]["levels"], 4);
  EXPECT_TRUE(j["stationarity"]["stationary"].get<bool>());
}

TEST(CliRoundTrip, ExpandOutputFeedsOtherCommands) {
  auto e = run({"expand", "--theta", kRationalTheta, "--depth", "10"});
  ASSERT_EQ(e.code, kExitOk);
  const std::string path = write_temp("expansion.json", e.out);
  auto b = run({"bratteli", "--input", path});
  ASSERT_EQ(b.code, kExitOk) << b.err;
  EXPECT_EQ(Json::parse(b.out)["diagram"]["levels"], 3);
  auto rep = run({"represent", "--input", path});
  ASSERT_EQ(rep.code, kExitOk) << rep.err;
  EXPECT_EQ(Json::parse(rep.out)["rank"], 3);
  // A diagram export is itself accepted back.
  const std::string dpath = write_temp("diagram.json", b.out);
  auto again = run({"bratteli", "--input", dpath});
  EXPECT_EQ(again.out, b.out);
  std::filesystem::remove(path);
  std::filesystem::remove(dpath);
}

TEST(CliRepresent, Examples) {
  const std::string identity = std::string(R"({"theta":)") + kRationalTheta +
                               R"(,"generators":[{"name":"g","matrix":[[1,0,0],[0,1,0],[0,0,1]]}],"relations":[[["g",1],["g",-1]]]})";
  auto r = run({"represent", "--theta", identity});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["generators"]["g"]["matrix"], Json::parse("[[1,0,0],[0,1,0],[0,0,1]]"));
  EXPECT_TRUE(j["report"]["relations"][0]["holds"].get<bool>());
  EXPECT_TRUE(j["report"]["homomorphism"].get<bool>());

  const std::string prefix = std::string(R"({"theta":)") + kRationalTheta +
                             R"(,"generators":[{"name":"g","matrix":[[0,1,0],[0,0,1],[1,3,4]]}]})";
  auto p = run({"represent", "--theta", prefix});
  ASSERT_EQ(p.code, kExitOk) << p.err;
  EXPECT_EQ(Json::parse(p.out)["generators"]["g"]["matrix"], Json::parse("[[0,0,1],[1,0,3],[0,1,4]]"));

  const std::string incompatible = "{\"theta\":" + tribonacci_theta() +
                                   R"(,"generators":[{"name":"g","expansion":{"rank":3,"blocks":[],"tail":{"kind":"periodic","preperiod":0,"period":[[1,2]]}}}]})";
  auto n = run({"represent", "--theta", incompatible});
  EXPECT_EQ(n.code, kExitNoCommonTail);
  EXPECT_EQ(Json::parse(n.err)["error"]["kind"], "NoCommonTail");
}

TEST(CliRepresent, TribonacciFindings) {
  const std::string input = "{\"theta\":" + tribonacci_theta() +
                            R"(,"generators":[{"name":"p","matrix":[[0,1,0],[0,0,1],[1,1,1]]}]})";
  auto r = run({"represent", "--theta", input, "--format", "text"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("stationary: not in W_aper"), std::string::npos);
  EXPECT_NE(r.out.find("fixes theta projectively"), std::string::npos);
  EXPECT_NE(r.out.find("faithfulness not guaranteed"), std::string::npos);
}

TEST(CliGenus, Dictionary) {
  EXPECT_EQ(Json::parse(run({"genus", "1"}).out)["rank"], 2);
  EXPECT_EQ(Json::parse(run({"genus", "2"}).out)["rank"], 6);
  EXPECT_EQ(run({"genus", "3", "--format", "text"}).out, "12\n");
  auto z = run({"genus", "0"});
  EXPECT_EQ(z.code, kExitInvalid);
  EXPECT_EQ(Json::parse(z.err)["error"]["kind"], "InvalidGenus");
}

TEST(CliUsage, ErrorsAndHelp) {
  auto u = run({"frobnicate"});
  EXPECT_EQ(u.code, kExitInvalid);
  EXPECT_EQ(Json::parse(u.err)["error"]["kind"], "UsageError");
  EXPECT_EQ(run({}).code, kExitInvalid);
  auto h = run({"--help"});
  EXPECT_EQ(h.code, kExitOk);
  EXPECT_NE(h.out.find("expand"), std::string::npos);
}

TEST(CliDeterminism, ByteIdenticalOutput) {
  const std::vector<std::vector<std::string>> invocations{
      {"expand", "--theta", tribonacci_theta(), "--depth", "12"},
      {"bratteli", "--theta", kRationalTheta, "--format", "dot"},
      {"represent", "--theta", std::string(R"({"theta":)") + kRationalTheta +
                                   R"(,"generators":[{"name":"g","matrix":[[0,1,0],[0,0,1],[1,3,4]]}]})"},
  };
  for (const auto& args : invocations) {
    auto a = run(args);
    auto b = run(args);
    EXPECT_EQ(a.code, kExitOk) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
}

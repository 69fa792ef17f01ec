#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

#include "coxeter/cli.hpp"

namespace {

struct TempDiagram {
  std::string path;
  explicit TempDiagram(const std::string& content) {
    static int counter = 0;
    path = "coxtool_test_" + std::to_string(counter++) + ".cox";
    std::ofstream out(path);
    out << content;
  }
  ~TempDiagram() { std::remove(path.c_str()); }
};

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = coxeter::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("analyze exit codes") {
  TempDiagram not_intrinsic("generators s t u\nedge s u inf\nedge t u inf\n");
  auto r1 = run_cli({"analyze", not_intrinsic.path, "--generator", "s"});
  CHECK(r1.code == 10);
  CHECK(r1.out.find("minus-one-component") != std::string::npos);

  TempDiagram intrinsic_case(
      "generators s a b u v\nedge a b 3\nedge s u inf\nedge s v inf\nedge u v 3\n"
      "edge a u inf\nedge b u 3\nedge a v 3\nedge b v inf\n");
  CHECK(run_cli({"analyze", intrinsic_case.path, "--generator", "s"}).code == 0);

  CHECK(run_cli({"analyze", not_intrinsic.path}).code == 2);  // missing --generator
  CHECK(run_cli({"analyze", "no_such_file.cox", "--generator", "s"}).code == 2);
  CHECK(run_cli({"analyze", not_intrinsic.path, "--generator", "zz"}).code == 2);

  TempDiagram not_right_angled("generators s t\nedge s t 3\n");
  CHECK(run_cli({"analyze", not_right_angled.path, "--generator", "s"}).code == 2);

  TempDiagram corrupted("generators s t\nedge s t 1\n");
  CHECK(run_cli({"verify", corrupted.path}).code == 2);
}

TEST_CASE("JSON reports parse and round-trip byte-identically") {
  TempDiagram blowable("generators s a b\nedge a b 3\n");
  for (std::vector<std::string> args :
       {std::vector<std::string>{"analyze", blowable.path, "--generator", "s", "--json"},
        std::vector<std::string>{"blowdown", blowable.path, "--generator", "s", "--candidate",
                                 "a", "--verify", "--json"},
        std::vector<std::string>{"verify", blowable.path, "--json"},
        std::vector<std::string>{"complex", blowable.path, "--json"}}) {
    auto r = run_cli(args);
    INFO(args[0]);
    CHECK(r.code != 2);
    auto parsed = nlohmann::json::parse(r.out);
    CHECK(parsed.dump(2) + "\n" == r.out);
    CHECK(parsed.contains("command"));
    CHECK(parsed.contains("result"));
    CHECK(parsed.contains("timing_ms"));
  }
}

TEST_CASE("blowdown command verifies and reports provenance") {
  TempDiagram blowable("generators s a b\nedge a b 3\n");
  auto r = run_cli({"blowdown", blowable.path, "--generator", "s", "--candidate", "a",
                    "--verify", "--json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["result"]["verification"]["status"] == "verified");
  CHECK(j["result"]["derived_type"][0] == "I2(6)");
  bool has_enumerated = false;
  for (const auto& entry : j["result"]["derived_matrix"])
    if (entry["provenance"].get<std::string>().find("enumeration") != std::string::npos)
      has_enumerated = true;
  CHECK(has_enumerated);
}

TEST_CASE("blowdown on a non-proper candidate directs to twist") {
  TempDiagram needs_twist(
      "generators s a b u\nedge a b 3\nedge a u inf\nedge b u 3\nedge s u inf\n");
  auto r = run_cli({"blowdown", needs_twist.path, "--generator", "s", "--candidate", "a"});
  CHECK(r.code == 1);
  CHECK(r.err.find("twist") != std::string::npos);

  auto t = run_cli({"twist", needs_twist.path, "--generator", "s", "--candidate", "a", "--json"});
  REQUIRE(t.code == 0);
  auto j = nlohmann::json::parse(t.out);
  CHECK(j["result"]["no_op"] == false);
  CHECK(j["result"]["twisted_diagram"].get<std::string>().find("u_tw") != std::string::npos);
}

TEST_CASE("twist on an already-proper candidate is a no-op") {
  TempDiagram proper(
      "generators s a b u\nedge a b 3\nedge s u inf\nedge a u inf\nedge b u inf\n");
  auto r = run_cli({"twist", proper.path, "--generator", "s", "--candidate", "a", "--json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["result"]["no_op"] == true);
}

TEST_CASE("verify runs the suites and respects caps") {
  TempDiagram c3("generators a b c\nedge a b 4\nedge b c 3\n");
  auto r = run_cli({"verify", c3.path, "--json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["result"]["counts"]["refuted"] == 0);
  CHECK(j["result"]["counts"]["verified"].get<int>() >= 5);

  // E8: the enumeration suite is skipped, the table checks still run.
  TempDiagram e8(
      "generators n1 n2 n3 n4 n5 n6 n7 n8\nedge n1 n2 3\nedge n2 n3 3\nedge n3 n4 3\n"
      "edge n4 n5 3\nedge n5 n6 3\nedge n6 n7 3\nedge n3 n8 3\n");
  auto re8 = run_cli({"verify", e8.path, "--json"});
  REQUIRE(re8.code == 0);
  auto j8 = nlohmann::json::parse(re8.out);
  CHECK(j8["result"]["counts"]["skipped"].get<int>() >= 1);
  CHECK(j8["result"]["counts"]["verified"].get<int>() >= 1);
  CHECK(j8["result"]["counts"]["refuted"] == 0);
}

TEST_CASE("complex statistics") {
  TempDiagram inf("generators a b\nedge a b inf\n");
  auto r = run_cli({"complex", inf.path, "--radius", "5", "--json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["result"]["scope"] == "ball");
  CHECK(j["result"]["chambers"] == 11);  // identity plus five per direction
  CHECK(j["result"]["roots"].size() == 2);

  TempDiagram finite("generators a b\nedge a b 3\n");
  auto rf = run_cli({"complex", finite.path, "--json"});
  REQUIRE(rf.code == 0);
  auto jf = nlohmann::json::parse(rf.out);
  CHECK(jf["result"]["scope"] == "whole-group");
  CHECK(jf["result"]["chambers"] == 6);
  CHECK(jf["result"]["panels"] == 6);
  CHECK(jf["result"]["walls"] == 3);
  for (const auto& root : jf["result"]["roots"]) {
    CHECK(root["positive"] == 3);
    CHECK(root["negative"] == 3);
  }
}

TEST_CASE("caps are configurable") {
  TempDiagram big("generators a b c d e\nedge a b 3\nedge b c 3\nedge c d 3\nedge d e 3\n");
  // A5 has 720 elements; a tiny cap forces the enumeration suite to skip.
  auto r = run_cli({"--max-enum", "100", "verify", big.path, "--json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["caps"]["max_enum"] == 100);
  CHECK(j["result"]["counts"]["skipped"].get<int>() >= 1);
}

TEST_CASE("environment variables override the default caps") {
  TempDiagram small("generators a b\nedge a b 3\n");
  setenv("COXTOOL_MAX_ENUM", "7777", 1);
  auto r = run_cli({"verify", small.path, "--json"});
  unsetenv("COXTOOL_MAX_ENUM");
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["caps"]["max_enum"] == 7777);
}

TEST_CASE("help is available") {
  auto r = run_cli({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("analyze") != std::string::npos);
}

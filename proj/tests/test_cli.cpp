#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + "'" FTPOLY_CLI "' " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "ftpoly-cli-test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("analyze") {
  auto r = run("analyze 3,3,4,2");
  CHECK(r.code == 0);
  CHECK(r.out.find("1/390") != std::string::npos);

  auto j = run("analyze 3,3,4,2 --json");
  REQUIRE(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["census"]["vertices"] == 23);
  CHECK(doc["census"]["degenerate"] == 1);
  CHECK(doc["verifiers_ok"] == true);
  CHECK(run("analyze 3,3,4,2 --json").out == j.out);

  auto pre = run("analyze 3,3,4,2 --json --preprocess");
  REQUIRE(pre.code == 0);
  CHECK(nlohmann::json::parse(pre.out)["census"]["degenerate"] == 0);
}

TEST_CASE("input sources") {
  const auto file = scratch("inst.txt");
  std::ofstream(file) << "# instance\n3 3\n4 2\n";
  CHECK(run("analyze '" + file.string() + "'").code == 0);
  CHECK(run("analyze -", "printf '1 1' |").code == 0);
  const auto json = scratch("inst.json");
  std::ofstream(json) << R"({"elements": [2, 2, 3, 1]})";
  auto r = run("analyze --json '" + json.string() + "'");
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["census"]["vertices"] == 24);
}

TEST_CASE("exit codes") {
  CHECK(run("solve 3,3,4,2").code == 0);
  CHECK(run("solve 1,2").code == 4);
  CHECK(run("analyze 3,3,4").code == 2);
  CHECK(run("analyze 3,x").code == 2);
  CHECK(run("analyze ''").code == 2);
  CHECK(run("analyze 1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1").code == 3);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("export 3,3,4,2 --format xml").code == 2);
  CHECK(run("export 3,3,4,2 --format ine --out /nonexistent-dir/x.ine").code == 5);
}

TEST_CASE("dimension cap precedence") {
  CHECK(run("analyze 3,3,4,2", "FT_MAX_DIM=2").code == 3);
  CHECK(run("analyze 3,3,4,2 --max-dim 4", "FT_MAX_DIM=2").code == 0);
  CHECK(run("analyze 3,3,4,2 --max-dim 2").code == 3);
}

TEST_CASE("export") {
  const auto ine = scratch("p.ine");
  REQUIRE(run("export 3,3,4,2 --format ine --out '" + ine.string() + "'").code == 0);
  const std::string ine_text = slurp(ine);
  CHECK(ine_text.find("10 5 rational") != std::string::npos);
  CHECK(ine_text.find("833/26 -16 -16 -17 -15") != std::string::npos);

  auto ext = run("export '" + ine.string() + "' --format ext");
  REQUIRE(ext.code == 0);
  CHECK(ext.out.find("23 5 rational") != std::string::npos);
  CHECK(ext.out.find("1 1 1 0 1/390") != std::string::npos);
  CHECK(run("export 3,3,4,2 --format ext").out == ext.out);

  auto small = run("export 1,1 --format ext");
  CHECK(small.out.find("5 3 rational") != std::string::npos);

  auto json = run("export 3,3,4,2 --format json");
  REQUIRE(json.code == 0);
  CHECK(nlohmann::json::parse(json.out)["census"]["edges"] == 47);
}

TEST_CASE("solve output") {
  auto r = run("solve 3,3,4,2");
  CHECK(r.out.rfind("YES exact partition, subset {1,2} (6 | 6)", 0) == 0);
  auto n = run("solve 1,2");
  CHECK(n.out.rfind("NO exact partition", 0) == 0);
  CHECK(n.out.find("ILP2 optimum 0") != std::string::npos);
}

TEST_CASE("check-lemmas") {
  auto none = run("check-lemmas --count 0");
  CHECK(none.code == 0);
  CHECK(none.out.find("all checks passed") != std::string::npos);
  auto some = run("check-lemmas --count 10 --seed 3 --sizes 2,4");
  CHECK(some.code == 0);
  CHECK(some.out.find("2m=2") != std::string::npos);
  CHECK(run("check-lemmas --sizes 3").code == 2);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "catalania/cache.hpp"

using namespace catalania;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "catalania_cli_test";
  std::filesystem::create_directories(dir);
  static int counter = 0;
  const std::filesystem::path outfile = dir / ("out" + std::to_string(counter++) + ".txt");
  const std::string cmd =
      std::string(CATALANIA_CLI_PATH) + " " + args + " > " + outfile.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(outfile);
  std::ostringstream buf;
  buf << in.rdbuf();
  r.output = buf.str();
  return r;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("enumerate prints the class count") {
  const RunResult r = run_cli("enumerate --order 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("5 classes") != std::string::npos);
}

TEST_CASE("capacity overruns exit with the usage code") {
  CHECK(run_cli("enumerate --order 9").exit_code == 2);
  CHECK(run_cli("sgraph --chain '1<<2'").exit_code == 2);
  CHECK(run_cli("verify --suite nosuch").exit_code == 2);
  CHECK(run_cli("classify -t 6").exit_code == 2);
}

TEST_CASE("identical invocations write identical bytes") {
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "catalania_cli_test";
  std::filesystem::create_directories(dir);
  const auto dot1 = dir / "a.dot", dot2 = dir / "b.dot";
  const auto json1 = dir / "a.json", json2 = dir / "b.json";
  CHECK(run_cli("sgraph --chain '2<1<3' --dot " + dot1.string() + " --json " + json1.string())
            .exit_code == 0);
  CHECK(run_cli("sgraph --chain '2<1<3' --dot " + dot2.string() + " --json " + json2.string())
            .exit_code == 0);
  CHECK(slurp(dot1) == slurp(dot2));
  CHECK(slurp(json1) == slurp(json2));
  CHECK(slurp(dot1).find("label=\"2\"") != std::string::npos);

  const auto g1 = dir / "g1.dot", g2 = dir / "g2.dot";
  CHECK(run_cli("graph --order 4 --dot " + g1.string()).exit_code == 0);
  CHECK(run_cli("graph --order 4 --dot " + g2.string()).exit_code == 0);
  CHECK(slurp(g1) == slurp(g2));
}

TEST_CASE("degenerate handles tied chains") {
  const RunResult r = run_cli("degenerate --chain '1<2=3' --values c1=1,c2=5,c3=5");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("quotient has 6 vertices") != std::string::npos);
  CHECK(r.output.find("matches quotient: yes") != std::string::npos);
  CHECK(run_cli("degenerate --chain '1<2=3' --values c1=1,c2=5,c3=7").exit_code == 2);
  CHECK(run_cli("degenerate --chain '1<2=3' --values c1=1").exit_code == 2);
}

TEST_CASE("verify runs a capped suite") {
  const RunResult r = run_cli("verify --suite counts --max-t 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("A1 pass") != std::string::npos);
}

TEST_CASE("enumeration cache round-trips") {
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "catalania_cache_test";
  std::filesystem::remove_all(dir);
  const ClassTable fresh = enumerate_classes(4);
  const ClassTable stored = cached_enumerate(4, dir);
  CHECK(std::filesystem::exists(dir / "classes_order_4.json"));
  const ClassTable loaded = cached_enumerate(4, dir);
  CHECK(stored.classes == fresh.classes);
  CHECK(loaded.classes == fresh.classes);
  CHECK(loaded.index == fresh.index);

  // JSON round trips of the file formats.
  const ClassKey key = fresh.classes.at(3);
  CHECK(class_key_from_json(class_key_to_json(key)) == key);
  CHECK(diagram_from_json(diagram_to_json(key.deplete)) == key.deplete);
  const LinearForm f = class_function(key);
  CHECK(form_from_json(form_to_json(f)).equals(f));

  // The CLI accepts the cache directory and stays consistent.
  const RunResult r = run_cli("enumerate --order 4 --cache " + dir.string());
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("14 classes") != std::string::npos);
}

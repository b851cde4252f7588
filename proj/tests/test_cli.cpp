#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr combined
};

RunResult run_cli(const std::string& args, const std::string& catalog_dir = "") {
  namespace fs = std::filesystem;
  static int counter = 0;
  const fs::path out_path =
      fs::temp_directory_path() / ("starfree_cli_out_" + std::to_string(counter++) + ".txt");
  const std::string env = catalog_dir.empty()
                              ? std::string{}
                              : "STARFREE_CATALOG_DIR=" + catalog_dir + " ";
  const std::string command = env + std::string(STARFREE_CLI_PATH) + " " + args + " > " +
                              out_path.string() + " 2>&1";
  const int status = std::system(command.c_str());

  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  result.output = buffer.str();
  fs::remove(out_path);
  return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("analyze a catalog group") {
  const RunResult r = run_cli("analyze --group Q8");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "order: 8"));
  CHECK(contains(r.output, "center order: 2"));
  CHECK(contains(r.output, "profile: (4, 3)"));
  CHECK(contains(r.output, "strong star number: 2"));
}

TEST_CASE("analyze rejects abelian groups with exit code 2") {
  const RunResult r = run_cli("analyze --group C6");
  CHECK(r.exit_code == 2);
  CHECK(contains(r.output, "abelian"));
}

TEST_CASE("analyze rejects unknown names with exit code 2") {
  const RunResult r = run_cli("analyze --group NoSuchGroup");
  CHECK(r.exit_code == 2);
  CHECK(contains(r.output, "unknown group name"));
}

TEST_CASE("analyze a group input file") {
  namespace fs = std::filesystem;
  const fs::path path = fs::temp_directory_path() / "starfree_s3_input.json";
  {
    std::ofstream out(path);
    out << R"({"name": "my-s3", "degree": 3, "generators": [[[0,1,2]], [[0,1]]]})";
  }
  const RunResult r = run_cli("analyze --group file:" + path.string());
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "group: my-s3"));
  CHECK(contains(r.output, "strong star number: 2"));
  fs::remove(path);

  const RunResult missing = run_cli("analyze --group file:/nonexistent/g.json");
  CHECK(missing.exit_code == 2);
}

TEST_CASE("analyze emits parseable JSON") {
  const RunResult r = run_cli("analyze --group A4 --format json");
  CHECK(r.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(r.output);
  CHECK(doc.at("order") == 12);
  CHECK(doc.at("strong_star_number") == 3);
  CHECK(doc.at("induced_star_number") == 2);
  CHECK(doc.at("profile").at("entries") == nlohmann::json::array({{3, 2}, {4, 1}}));
}

TEST_CASE("classify passes for k = 3") {
  const RunResult r = run_cli("classify --k 3");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "verified groups (4)"));
  CHECK(contains(r.output, "verdict: PASS"));
}

TEST_CASE("classify k = 5 passes and reports out-of-scope orders") {
  const RunResult r = run_cli("classify --k 5");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "verified groups (16)"));
  CHECK(contains(r.output, "UNVERIFIED-CANDIDATE orders"));
  CHECK(contains(r.output, "32"));
  CHECK(contains(r.output, "verdict: PASS"));
}

TEST_CASE("classify k = 6 renders the raw list without a verdict") {
  const RunResult r = run_cli("classify --k 6");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "strong 6-star-free classification"));
  CHECK_FALSE(contains(r.output, "verdict:"));
}

TEST_CASE("classify validates k") {
  CHECK(run_cli("classify --k 1").exit_code == 2);
  CHECK(run_cli("classify --k 7").exit_code == 2);
}

TEST_CASE("classify JSON output round-trips") {
  const RunResult r = run_cli("classify --k 4 --format json");
  CHECK(r.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(r.output);
  CHECK(doc.at("pass").get<bool>());
  CHECK(doc.at("verified_groups").size() == 16);
  CHECK(doc.at("unverifiable_orders") == nlohmann::json::array({32}));
}

TEST_CASE("solve command") {
  const RunResult r = run_cli("solve --sizes 2,5 --center 1");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "n=10 z=1 m=(1,2)\n");

  const RunResult empty = run_cli("solve --sizes 2,4 --center 1");
  CHECK(empty.exit_code == 0);
  CHECK(contains(empty.output, "no solutions"));

  CHECK(run_cli("solve --sizes 2,,5 --center 1").exit_code == 2);
  CHECK(run_cli("solve --sizes abc --center 1").exit_code == 2);
  CHECK(run_cli("solve --sizes 3,4 --center 2").exit_code == 2);
}

TEST_CASE("solve JSON output") {
  const RunResult r = run_cli("solve --sizes 4,6 --center 2 --format json");
  CHECK(r.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(r.output);
  CHECK(doc.size() == 3);
  CHECK(doc[0].at("order") == 12);
  CHECK(doc[0].at("multiplicities") == nlohmann::json::array({2, 2}));
}

TEST_CASE("enumerate command") {
  const RunResult r = run_cli("enumerate --k 2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "candidate orders: 6 8"));
  CHECK(run_cli("enumerate --k 0").exit_code == 2);
}

TEST_CASE("dihedral command with verification") {
  const RunResult r = run_cli("dihedral --n 7 --verify");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "S(D14) = 6"));
  CHECK(contains(r.output, "computed: 6"));
  CHECK(contains(r.output, "verification: OK"));
  CHECK(run_cli("dihedral --n 2").exit_code == 2);

  // Closed forms work beyond the construction bound; verification does not.
  const RunResult large = run_cli("dihedral --n 200");
  CHECK(large.exit_code == 0);
  CHECK(contains(large.output, "S(D400) = 198"));
  CHECK(run_cli("dihedral --n 200 --verify").exit_code == 2);
}

TEST_CASE("export produces deterministic DOT output") {
  const RunResult first = run_cli("export --group A4 --format dot");
  const RunResult second = run_cli("export --group A4 --format dot");
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);
  CHECK(first.output.rfind("graph \"A4\" {", 0) == 0);

  // Eleven vertices and seven edges (one triangle, four disjoint edges).
  int vertex_lines = 0, edge_lines = 0;
  std::istringstream lines(first.output);
  std::string line;
  while (std::getline(lines, line)) {
    if (contains(line, "--")) {
      ++edge_lines;
    } else if (contains(line, ";")) {
      ++vertex_lines;
    }
  }
  CHECK(vertex_lines == 11);
  CHECK(edge_lines == 7);
}

TEST_CASE("export respects --output") {
  namespace fs = std::filesystem;
  const fs::path path = fs::temp_directory_path() / "starfree_export.dot";
  const RunResult r = run_cli("export --group Q8 --output " + path.string());
  CHECK(r.exit_code == 0);
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  CHECK(buffer.str().rfind("graph \"Q8\" {", 0) == 0);
  fs::remove(path);
}

TEST_CASE("identical invocations are byte-identical") {
  const RunResult a = run_cli("classify --k 4");
  const RunResult b = run_cli("classify --k 4");
  CHECK(a.output == b.output);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("analyze").exit_code == 2);
  CHECK(run_cli("frobnicate --k 3").exit_code == 2);
}

TEST_CASE("STARFREE_CATALOG_DIR overrides the data path") {
  namespace fs = std::filesystem;

  SUBCASE("a broken override fails loudly") {
    const RunResult r = run_cli("analyze --group Q8", "/nonexistent/catalog");
    CHECK(r.exit_code == 2);
    CHECK(contains(r.output, "catalog directory not found"));
  }

  SUBCASE("a catalog with a missing order turns PASS into a mismatch") {
    const fs::path tmp = fs::temp_directory_path() / "starfree_cli_partial_catalog";
    fs::remove_all(tmp);
    fs::create_directories(tmp);
    fs::copy(STARFREE_TEST_CATALOG_DIR, tmp, fs::copy_options::recursive);
    fs::remove(tmp / "order_06.json");

    const RunResult r = run_cli("classify --k 2", tmp.string());
    CHECK(r.exit_code == 1);
    CHECK(contains(r.output, "MISSING"));
    CHECK(contains(r.output, "verdict: FAIL"));
    CHECK(contains(r.output, "UNVERIFIED-CANDIDATE orders (outside catalog scope): 6"));
    fs::remove_all(tmp);
  }
}

#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"
#include "tempo_btw/io.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

// Runs the command-line tool with `args`, capturing stdout.
Run run(const std::string& args) {
  const std::string cmd = std::string(TEMPO_BTW_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

fs::path scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("tempo_btw_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
  const auto path = scratch() / name;
  std::ofstream(path) << text;
  return path.string();
}

std::vector<std::vector<std::string>> csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> row;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(cell);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST_CASE("compute: engines agree on the three-path sample") {
  const auto input = write_file("three.txt", test_support::three_paths_text());
  for (const char* strictness : {"--strict", "--nonstrict"}) {
    const auto temporal = run("compute " + input + " " + strictness + " --variant sh --variant shfm");
    const auto expansion =
        run("compute " + input + " " + strictness + " --variant sh --variant shfm --engine expansion");
    REQUIRE(temporal.status == 0);
    REQUIRE(expansion.status == 0);
    const auto a = csv(temporal.out), b = csv(expansion.out);
    REQUIRE(a.size() == 9);
    REQUIRE(a.size() == b.size());
    CHECK(a[0] == b[0]);
    for (std::size_t i = 1; i < a.size(); ++i) {
      CHECK(a[i][0] == b[i][0]);
      for (std::size_t j = 1; j < a[i].size(); ++j) CHECK(std::stod(a[i][j]) == doctest::Approx(std::stod(b[i][j])));
    }
  }
}

TEST_CASE("compute: output format and determinism") {
  const auto input = write_file("three.txt", test_support::three_paths_text());
  const auto first = run("compute " + input);
  CHECK(first.status == 0);
  CHECK(first.out == run("compute " + input).out);
  CHECK(csv(first.out)[0] ==
        std::vector<std::string>{"vertex", "nonstrict-sh", "nonstrict-shfm", "strict-sh", "strict-shfm", "strict-pfm"});
  const auto threaded = run("compute " + input + " --threads 4");
  CHECK(threaded.status == 0);
  const auto a = csv(first.out), b = csv(threaded.out);
  for (std::size_t i = 1; i < a.size(); ++i) {
    for (std::size_t j = 1; j < a[i].size(); ++j) CHECK(std::stod(a[i][j]) == doctest::Approx(std::stod(b[i][j])));
  }
  const auto exact = run("compute " + input + " --exact --variant strict-sh --variant nonstrict-sh");
  CHECK(exact.out.find("s,4,15/2\n") != std::string::npos);

  const auto out_file = (scratch() / "scores.csv").string();
  CHECK(run("compute " + input + " -o " + out_file).out.empty());
  std::ifstream in(out_file);
  CHECK(std::string(std::istreambuf_iterator<char>(in), {}) == first.out);
}

TEST_CASE("compute: empty graph and configuration errors") {
  const auto empty = write_file("empty.txt", "# nothing\n");
  const auto r = run("compute " + empty + " --variant sh");
  CHECK(r.status == 0);
  CHECK(r.out == "vertex,strict-sh\n");

  const auto input = write_file("three.txt", test_support::three_paths_text());
  CHECK(run("compute " + input + " --variant pfm --nonstrict").status == 1);
  CHECK(run("compute " + input + " --variant fm").status == 1);
  CHECK(run("compute " + input + " --variant pfm --engine expansion").status == 1);
  CHECK(run("compute " + input + " --strict --nonstrict").status == 1);
  CHECK(run("compute " + input + " --engine dijkstra").status == 1);
  CHECK(run("compute").status == 1);
  CHECK(run("compute " + (scratch() / "missing.txt").string()).status == 2);
  CHECK(run("compute " + write_file("bad.txt", "a b x\n")).status == 2);
}

TEST_CASE("compute: oracle engine and its guards") {
  const auto input = write_file("three.txt", test_support::three_paths_text());
  const auto r = run("compute " + input + " --engine oracle --variant fm --variant fa --exact");
  REQUIRE(r.status == 0);
  CHECK(r.out.find("b2,5,9/2\n") != std::string::npos);
  CHECK(run("compute " + input + " --engine oracle --variant sh --max-paths 3").status == 2);
  CHECK(run("compute " + input + " --engine oracle --variant sh --max-paths 1000").status == 0);
  setenv("TEMPO_BTW_LIMITS", "max_paths=3", 1);
  CHECK(run("compute " + input + " --engine oracle --variant sh").status == 2);
  setenv("TEMPO_BTW_LIMITS", "max_paths=oops", 1);
  CHECK(run("compute " + input + " --engine oracle --variant sh").status == 1);
  unsetenv("TEMPO_BTW_LIMITS");
}

TEST_CASE("compare: pair columns") {
  const auto input = write_file("three.txt", test_support::three_paths_text());
  const auto all = csv(run("compare " + input).out);
  REQUIRE(all.size() == 4);
  CHECK(all[0].size() == 2 + 10);
  CHECK(all[1][1] == "tau");
  CHECK(all[3][1] == "top10");

  const auto single = run("compare " + input + " --variant sh");
  CHECK(single.status == 0);
  CHECK(csv(single.out)[0] == std::vector<std::string>{"dataset", "metric"});

  // Identical vectors: tau-a keeps tied pairs in the denominator.
  const auto same = csv(run("compare " + input + " --variant sh --variant strict-sh --top-k 3").out);
  CHECK(std::stod(same[1][2]) == doctest::Approx(1.0 - std::stod(same[2][2])));
  CHECK(std::stod(same[2][2]) > 0.0);
  CHECK(same[3][1] == "top3");
  CHECK(same[3][2] == "3");

  const auto two = csv(run("compare " + input + " " + input).out);
  CHECK(two.size() == 7);

  const auto distinct = write_file("path4.txt", "a b 1\nb c 2\nc d 3\nd e 4\ne f 5\n");
  const auto chain = csv(run("compare " + distinct + " --variant strict-sh --variant nonstrict-sh").out);
  CHECK(chain[3][1] == "top10");
  CHECK(chain[3][2] == "6");  // k is capped at the number of vertices
}

TEST_CASE("histogram") {
  const auto input = write_file("three.txt", test_support::three_paths_text());
  const auto rows = csv(run("histogram " + input + " --variant sh --buckets 4").out);
  REQUIRE(rows.size() == 5);
  std::size_t total = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) total += std::stoul(rows[i][4]);
  CHECK(total == 8);
}

TEST_CASE("oracle-check") {
  const auto input = write_file("three.txt", test_support::three_paths_text());
  const auto r = run("oracle-check " + input);
  CHECK(r.status == 0);
  for (const auto& row : csv(r.out)) {
    if (row[0] != "graph") CHECK(row[2] == "0");
  }
  CHECK(run("oracle-check --random 30 --seed 7").status == 0);
  CHECK(run("oracle-check --random 10 --seed 7 --engine expansion").status == 0);
  CHECK(run("oracle-check " + input + " --corrupt-engine").status == 3);
  CHECK(run("oracle-check").status == 1);
  CHECK(run("oracle-check " + input + " --engine oracle").status == 1);
}

TEST_CASE("gadget") {
  const auto m = run("gadget matching --left 2 --right 2 --edge 0:0 --edge 0:1 --edge 1:0 --edge 1:1");
  CHECK(m.status == 0);
  CHECK(m.out.starts_with("# matchings=7 strict_paths=6 identity=holds\n"));
  std::istringstream in(m.out);
  const auto parsed = tempo_btw::parse_edge_list(in);
  CHECK(parsed.graph.num_vertices() == 6);
  CHECK(parsed.graph.num_edges() == 2 + 4 + 2 + 2);
  CHECK(run("gadget matching --random --left 4 --right 3 --seed 5").status == 0);
  CHECK(run("gadget matching --edge 0-1").status == 1);

  const auto edge = write_file("edge.txt", "a b 1\n");
  const auto b = run("gadget betweenness " + edge + " --a a --b b");
  CHECK(b.status == 3);
  CHECK(b.out.find("# strict: paths=1 C(v')=1/2 four_pair_recovery=7 corrected_recovery=1\n") != std::string::npos);
  CHECK(b.out.find("# nonstrict: paths=1 C(v')=1 four_pair_recovery=3 corrected_recovery=1\n") !=
        std::string::npos);
  CHECK(run("gadget betweenness " + edge + " --a a --b q").status == 2);
}

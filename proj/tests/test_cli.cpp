#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "sdd/io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace sdd;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

/// Scratch directory removed at scope exit.
struct Scratch {
  fs::path dir;
  Scratch() {
    dir = fs::temp_directory_path() / ("sddtool-test-" + std::to_string(std::random_device{}()));
    fs::create_directories(dir);
  }
  ~Scratch() { fs::remove_all(dir); }
  std::string path(const std::string& name) const { return (dir / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }
};

json results_of(const Run& r) { return json::parse(r.out)["results"]; }

/// Drops the timing line so two reports can be compared.
std::string without_timing(const std::string& report) {
  std::istringstream in(report);
  std::string line, kept;
  while (std::getline(in, line))
    if (!line.starts_with("timing_ms:")) kept += line + '\n';
  return kept;
}

}  // namespace

TEST_CASE("gen writes the family edge lists") {
  auto p = run({"gen", "P", "5", "2"});
  CHECK(p.code == cli::kOk);
  auto f = parse_edge_list(p.out);
  CHECK(f.graph.vertex_count() == 10);
  CHECK(f.graph.edge_count() == 15);
  CHECK(f.family->line() == "# family P 5 2");

  auto i = parse_edge_list(run({"gen", "I", "7", "2", "3"}).out);
  CHECK(i.graph.vertex_count() == 14);
  CHECK(i.graph.edge_count() == 21);

  auto k = parse_edge_list(run({"gen", "K4U", "3"}).out);
  CHECK(k.graph.vertex_count() == 12);
  CHECK(k.graph.edge_count() == 18);

  CHECK(run({"gen", "P", "4", "2"}).code == cli::kUsage);
  CHECK(run({"gen", "Q", "4", "1"}).code == cli::kUsage);
  CHECK(run({"gen", "P", "4"}).code == cli::kUsage);
  CHECK(run({}).code == cli::kUsage);
}

TEST_CASE("sign modes") {
  Scratch tmp;
  std::string g = tmp.path("p72.txt");
  REQUIRE(run({"gen", "P", "7", "2", "-o", g}).code == cli::kOk);

  auto pos = run({"sign", g});
  CHECK(pos.code == cli::kOk);
  std::istringstream lines(pos.out);
  std::string line;
  std::size_t rows = 0;
  while (std::getline(lines, line))
    if (!line.starts_with("#") && line.find(' ') != line.rfind(' ')) {
      CHECK(line.ends_with("+"));
      ++rows;
    }
  CHECK(rows == 21);

  CHECK(run({"sign", g, "--mode", "random", "--p", "0"}).out == pos.out);
  auto a = run({"--seed", "9", "sign", g, "--mode", "random"});
  auto b = run({"--seed", "9", "sign", g, "--mode", "random"});
  CHECK(a.out == b.out);
  CHECK(a.out != run({"--seed", "10", "sign", g, "--mode", "random"}).out);
  CHECK(run({"sign", g, "--mode", "random", "--p", "1.5"}).code == cli::kUsage);

  std::string negs = tmp.write("negs.txt", "u0 u1\n# comment\nv0 v2\n");
  auto ex = run({"sign", g, "--mode", "explicit", "--negatives", negs});
  CHECK(ex.code == cli::kOk);
  auto s = parse_edge_list(ex.out).as_signed();
  CHECK(s.negative_edge_count() == 2);
  CHECK(s.sign(0, 1) == Sign::Negative);
  CHECK(s.sign(7, 9) == Sign::Negative);
  CHECK(run({"sign", g, "--mode", "explicit", "--negatives", tmp.write("bad.txt", "u0 u3\n")}).code ==
        cli::kUsage);
  CHECK(run({"sign", tmp.path("missing.txt")}).code == cli::kUsage);
}

TEST_CASE("gen, sign, read round trip") {
  Scratch tmp;
  std::string g = tmp.path("g.txt"), s = tmp.path("s.txt");
  REQUIRE(run({"gen", "I", "9", "2", "4", "-o", g}).code == cli::kOk);
  REQUIRE(run({"--seed", "5", "sign", g, "--mode", "random", "--p", "0.3", "-o", s}).code == cli::kOk);
  auto file = parse_edge_list(read_text_file(s));
  auto expected = random_signature(igraph(9, 2, 4).graph, 5, 0.3);
  CHECK(file.as_signed() == expected);
  CHECK(*file.family == header_for(igraph(9, 2, 4)));
}

TEST_CASE("verify exit codes and verdicts") {
  Scratch tmp;
  std::string g = tmp.path("p41.txt");
  REQUIRE(run({"gen", "P", "4", "1", "-o", g}).code == cli::kOk);
  std::string neg = tmp.write("neg.txt", "u0 u1\nv0 v1\n");
  std::string sg = tmp.path("p41neg.txt");
  REQUIRE(run({"sign", g, "--mode", "explicit", "--negatives", neg, "-o", sg}).code == cli::kOk);

  auto ok = run({"--json", "verify", g, "--set", "u0,v0,u2,v2"});
  CHECK(ok.code == cli::kOk);
  CHECK(results_of(ok)["ok"] == true);
  CHECK(results_of(ok)["failure_kind"] == "none");

  auto unbalanced = run({"--json", "verify", sg, "--set", "u0,v0,u2,v2"});
  CHECK(unbalanced.code == cli::kNegative);
  CHECK(results_of(unbalanced)["failure_kind"] == "unbalanced_cut");
  CHECK(results_of(unbalanced)["witness_cycle"].size() == 4);

  auto coverage = run({"--json", "verify", g, "--set", "u0,u1,u2,u3"});
  CHECK(coverage.code == cli::kNegative);
  CHECK(results_of(coverage)["failure_kind"] == "coverage");
  CHECK(results_of(coverage)["failure_vertex"] == "v0");
  CHECK(results_of(coverage)["failure_multiplicity"] == 1);

  CHECK(run({"verify", g, "--set", "w9"}).code == cli::kUsage);
  CHECK(run({"verify", g}).code == cli::kUsage);
}

TEST_CASE("construct self-checks") {
  auto p17 = run({"--json", "construct", "P", "17", "2"});
  CHECK(p17.code == cli::kOk);
  CHECK(results_of(p17)["size"] == 25);
  CHECK(results_of(p17)["case_tag"] == "gcd1_odd");
  CHECK(results_of(p17)["self_check"]["pass"] == true);
  CHECK(results_of(p17)["self_check"]["signatures_tested"] == 100);

  auto p16 = run({"--json", "construct", "P", "16", "6"});
  CHECK(results_of(p16)["size"] == 22);
  CHECK(results_of(p16)["case_tag"] == "gcd_d");

  auto tight = run({"--json", "construct", "P", "6", "1", "--tight"});
  CHECK(tight.code == cli::kOk);
  CHECK(results_of(tight)["size"] == 6);
  CHECK(results_of(tight)["self_check"]["cut_is_outer_plus_inner"] == true);

  CHECK(run({"construct", "P", "7", "2", "--tight"}).code == cli::kUsage);
  CHECK(run({"construct", "I", "9", "2", "4"}).code == cli::kOk);
}

TEST_CASE("solve exit codes") {
  Scratch tmp;
  std::string k4 = tmp.path("k4.txt");
  REQUIRE(run({"gen", "K4U", "1", "-o", k4}).code == cli::kOk);
  auto r = run({"--json", "solve", k4});
  CHECK(r.code == cli::kOk);
  CHECK(results_of(r)["value"] == 2);
  CHECK(results_of(r)["limits_hit"] == false);

  std::string p = tmp.path("p41.txt");
  REQUIRE(run({"gen", "P", "4", "1", "-o", p}).code == cli::kOk);
  auto rp = run({"--json", "solve", p});
  CHECK(results_of(rp)["value"] == 4);
  CHECK(results_of(rp)["witness"] == json{"u0", "u1", "v2", "v3"});

  auto budget = run({"--json", "solve", p, "--budget", "1"});
  CHECK(budget.code == cli::kBudget);
  CHECK(results_of(budget)["limits_hit"] == true);

  CHECK(run({"solve", p, "--max-n", "6"}).code == cli::kUsage);
  CHECK(run({"solve", p, "--unsigned"}).code == cli::kOk);
}

TEST_CASE("reports are reproducible apart from timing") {
  Scratch tmp;
  std::string p = tmp.path("p52.txt");
  REQUIRE(run({"gen", "P", "5", "2", "-o", p}).code == cli::kOk);
  auto a = run({"--seed", "3", "solve", p});
  auto b = run({"--seed", "3", "solve", p});
  CHECK(without_timing(a.out) == without_timing(b.out));
  CHECK(a.out.find("input_digest: sha256:") != std::string::npos);
  CHECK(a.out.find("seed: 3") != std::string::npos);
}

TEST_CASE("sweep") {
  auto k1 = run({"sweep", "--n", "3:12", "--k", "1"});
  CHECK(k1.code == cli::kOk);
  std::istringstream rows(k1.out);
  std::string line;
  std::getline(rows, line);
  CHECK(line == "n,j,k,d,case_tag,construction_size,closed_form_bound,lower_bound,solver_value,sandwich_ok");
  std::size_t count = 0;
  while (std::getline(rows, line)) {
    CHECK(line.ends_with(",1"));
    ++count;
  }
  CHECK(count == 10);

  auto k2 = run({"sweep", "--n", "5:15", "--k", "2", "--cap", "0"});
  CHECK(k2.code == cli::kOk);
  CHECK(k2.out.find("15,1,2,1,gcd1_even,22,22,15,,na") != std::string::npos);
  CHECK(k2.out.find("9,1,2,1,gcd1_odd,13,13,9,,na") != std::string::npos);

  CHECK(run({"--seed", "4", "sweep", "--n", "3:9"}).out == run({"--seed", "4", "sweep", "--n", "3:9"}).out);
  CHECK(run({"sweep", "--family", "X"}).code == cli::kUsage);
}

TEST_CASE("balance, switch and decompose-cut") {
  Scratch tmp;
  std::string g = tmp.path("p41.txt");
  REQUIRE(run({"gen", "P", "4", "1", "-o", g}).code == cli::kOk);
  std::string sg = tmp.path("neg.txt");
  REQUIRE(run({"sign", g, "--mode", "explicit", "--negatives", tmp.write("n.txt", "u0 u1\n"), "-o", sg}).code ==
          cli::kOk);

  CHECK(run({"balance", g}).code == cli::kOk);
  auto bal = run({"--json", "balance", sg});
  CHECK(bal.code == cli::kNegative);
  CHECK(results_of(bal)["balanced"] == false);

  std::string switched = tmp.path("sw.txt");
  CHECK(run({"switch", sg, "--set", "u0", "-o", switched}).code == cli::kOk);
  auto a = parse_edge_list(read_text_file(sg)).as_signed();
  auto b = parse_edge_list(read_text_file(switched)).as_signed();
  CHECK(switching_equivalent(a, b));
  CHECK(b.sign(0, 1) == Sign::Positive);
  CHECK(b.sign(0, 3) == Sign::Negative);

  auto dc = run({"--json", "decompose-cut", g, "--set", "u0,v0,u2,v2"});
  CHECK(dc.code == cli::kOk);
  CHECK(results_of(dc)["cycles"].size() == 2);
  auto odd = run({"--json", "decompose-cut", g, "--set", "u0,u1,u2,u3"});
  CHECK(odd.code == cli::kNegative);
  CHECK(results_of(odd)["even"] == false);
}

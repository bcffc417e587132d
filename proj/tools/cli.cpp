#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <sstream>

#include <openssl/evp.h>

#include "CLI11.hpp"
#include "sdd/constructions.hpp"
#include "sdd/domination.hpp"
#include "sdd/families.hpp"
#include "sdd/io.hpp"
#include "sdd/report.hpp"

namespace sdd::cli {

using nlohmann::json;

namespace {

/// Raised for usage problems detected after argument parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream ss;
  for (unsigned int i = 0; i < len; ++i) ss << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return ss.str();
}

struct Context {
  std::vector<std::string> argv;
  std::ostream& out;
  bool json_output = false;
  unsigned long long seed = kDefaultSeed;
  std::string inputs;  // concatenated contents of every input file
  bool has_inputs = false;
  std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

  EdgeListFile load(const std::string& path) {
    std::string text = read_text_file(path);
    inputs += text;
    has_inputs = true;
    return parse_edge_list(text);
  }

  /// Emits the run report: command echo, input digest, seed, results, timing.
  void report(const json& results) {
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    json digest = has_inputs ? json("sha256:" + sha256_hex(inputs)) : json(nullptr);
    if (json_output) {
      json r;
      r["command"] = argv;
      r["input_digest"] = digest;
      r["seed"] = seed;
      r["results"] = results;
      r["timing_ms"] = ms;
      out << r.dump(2) << '\n';
      return;
    }
    std::string command;
    for (const auto& a : argv) command += (command.empty() ? "" : " ") + a;
    out << "command: " << command << '\n';
    out << "input_digest: " << (has_inputs ? digest.get<std::string>() : "-") << '\n';
    out << "seed: " << seed << '\n';
    out << render_lines(results);
    out << "timing_ms: " << std::fixed << std::setprecision(3) << ms << '\n';
  }
};

// --- family parameters ----------------------------------------------------

struct FamilySpec {
  std::string family;
  std::vector<std::size_t> params;
};

void expect_params(const FamilySpec& f, std::size_t count, const char* usage) {
  if (f.params.size() != count) throw UsageError(std::string("usage: ") + usage);
}

FamilyGraph family_graph(const FamilySpec& f) {
  if (f.family == "P") {
    expect_params(f, 2, "P n k");
    return petersen(f.params[0], f.params[1]);
  }
  if (f.family == "I") {
    expect_params(f, 3, "I n j k");
    return igraph(f.params[0], f.params[1], f.params[2]);
  }
  throw UsageError("family must be P or I, got '" + f.family + "'");
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + path + "'");
  file << content;
  if (!file) throw UsageError("failed writing '" + path + "'");
}

// --- gen --------------------------------------------------------------------

struct GenArgs {
  FamilySpec spec;
  std::string output;
};

int cmd_gen(Context& ctx, const GenArgs& a) {
  std::ostringstream text;
  std::size_t vertices = 0, edges = 0;
  if (a.spec.family == "K4U") {
    expect_params(a.spec, 1, "K4U m");
    Graph g = k4_union(a.spec.params[0]);
    write_edge_list(text, g, FamilyHeader{"K4U", a.spec.params});
    vertices = g.vertex_count();
    edges = g.edge_count();
  } else {
    FamilyGraph f = family_graph(a.spec);
    write_edge_list(text, f.graph, header_for(f));
    vertices = f.graph.vertex_count();
    edges = f.graph.edge_count();
  }
  write_output(a.output, text.str(), ctx.out);
  if (!a.output.empty() && a.output != "-")
    ctx.report({{"output", a.output}, {"vertices", vertices}, {"edges", edges}});
  return kOk;
}

// --- sign -------------------------------------------------------------------

struct SignArgs {
  std::string graph_file;
  std::string mode = "all-positive";
  double p_neg = 0.5;
  std::string negatives_file;
  std::string output;
};

int cmd_sign(Context& ctx, const SignArgs& a) {
  EdgeListFile file = ctx.load(a.graph_file);
  SignedGraph s;
  if (a.mode == "all-positive") {
    s = all_positive(file.graph);
  } else if (a.mode == "random") {
    s = random_signature(file.graph, ctx.seed, a.p_neg);
  } else if (a.mode == "explicit") {
    if (a.negatives_file.empty()) throw UsageError("--mode explicit needs --negatives FILE");
    // One negative edge per line, "a b" with indices or u/v labels.
    std::string text = read_text_file(a.negatives_file);
    ctx.inputs += text;
    Signature sig(file.graph.edge_count(), Sign::Positive);
    std::istringstream in(text);
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
      std::istringstream ls(line);
      std::string x, y;
      if (!(ls >> x) || x.front() == '#') continue;
      if (!(ls >> y)) throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": expected 'a b'");
      auto ends = parse_vertex_set(x + "," + y, file.graph.vertex_count(), file.family).members();
      auto e = ends.size() == 2 ? file.graph.find_edge(ends[0], ends[1]) : std::nullopt;
      if (!e) throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": " + x + " " + y + " is not an edge");
      sig[*e] = Sign::Negative;
    }
    s = SignedGraph(file.graph, std::move(sig));
  } else {
    throw UsageError("--mode must be all-positive, random or explicit");
  }
  std::ostringstream text;
  write_signed_edge_list(text, s, file.family);
  write_output(a.output, text.str(), ctx.out);
  if (!a.output.empty() && a.output != "-")
    ctx.report({{"output", a.output}, {"edges", s.graph().edge_count()}, {"negative_edges", s.negative_edge_count()}});
  return kOk;
}

// --- verify -----------------------------------------------------------------

struct VerifyArgs {
  std::string signed_file;
  std::string set;
  bool unsigned_only = false;
  std::size_t k = 2;
};

int cmd_verify(Context& ctx, const VerifyArgs& a) {
  EdgeListFile file = ctx.load(a.signed_file);
  VertexSet d = parse_vertex_set(a.set, file.graph.vertex_count(), file.family);
  DdsVerdict v = a.unsigned_only ? is_k_tuple_dominating(file.graph, d, a.k) : is_signed_dds(file.as_signed(), d);
  json r = to_json(v, file.family);
  r["set"] = vertex_list(d.members(), file.family);
  ctx.report(r);
  return v.ok ? kOk : kNegative;
}

// --- construct --------------------------------------------------------------

struct ConstructArgs {
  FamilySpec spec;
  bool tight = false;
  std::size_t samples = 100;
};

int cmd_construct(Context& ctx, const ConstructArgs& a) {
  FamilyGraph f = family_graph(a.spec);
  const auto header = header_for(f);
  json check;
  bool pass = true;
  ConstructionResult c;

  if (a.tight) {
    if (!(f.kind == FamilyKind::Petersen && f.k == 1))
      throw UsageError("--tight applies to P n 1 only");
    auto [res, signed_graph] = construct_pn1_tight(f.n);
    c = std::move(res);
    DdsVerdict v = is_signed_dds(signed_graph, c.set);
    // The cut must be exactly the outer cycle together with the inner cycle.
    Graph cut = cut_subgraph(f.graph, c.set);
    std::vector<Cycle> want = f.outer_cycles;
    want.insert(want.end(), f.inner_cycles.begin(), f.inner_cycles.end());
    bool rims = is_even_graph(cut) && cut.edge_count() == 2 * f.n;
    std::vector<Cycle> got;
    if (rims) {
      for (auto& cyc : cycle_decomposition(cut).cycles) got.push_back(canonical_cycle(cyc));
      for (auto& cyc : want) cyc = canonical_cycle(cyc);
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      rims = got == want;
    }
    check["signature"] = "all-positive";
    check["verdict"] = to_json(v, header);
    check["cut_is_outer_plus_inner"] = rims;
    pass = v.ok && rims;
  } else {
    c = construct_for(f);
    const bool coverage = is_k_tuple_dominating(f.graph, c.set, 2).ok;
    const bool forest = is_forest(cut_subgraph(f.graph, c.set));
    std::size_t failures = 0;
    for (std::size_t i = 0; i < a.samples; ++i)
      if (!is_signed_dds(random_signature(f.graph, ctx.seed + i, 0.5), c.set).ok) ++failures;
    check["coverage_ok"] = coverage;
    check["cut_is_forest"] = forest;
    check["signatures_tested"] = a.samples;
    check["signature_failures"] = failures;
    pass = coverage && failures == 0 && (!c.cut_forest_expected || forest);
  }
  const bool size_ok = c.set.size() == c.claimed_size;
  check["size_matches_claim"] = size_ok;
  pass = pass && size_ok;
  check["pass"] = pass;

  json r = to_json(c, header);
  r["graph"] = f.name();
  r["self_check"] = check;
  ctx.report(r);
  return pass ? kOk : kNegative;
}

// --- solve ------------------------------------------------------------------

struct SolveArgs {
  std::string signed_file;
  std::size_t max_n = 24;
  std::uint64_t budget = 0;
  long long time_ms = 0;
  unsigned workers = 1;
  bool unsigned_only = false;
  std::size_t k = 2;
};

int cmd_solve(Context& ctx, const SolveArgs& a) {
  EdgeListFile file = ctx.load(a.signed_file);
  SolveLimits limits;
  limits.max_vertices = a.max_n;
  limits.max_nodes = a.budget;
  limits.wall_clock = std::chrono::milliseconds(a.time_ms);
  limits.workers = a.workers;
  SolveResult r = a.unsigned_only ? min_k_tuple_dominating(file.graph, a.k, limits)
                                  : min_signed_dds(file.as_signed(), limits);
  json j = to_json(r, file.family);
  j["mode"] = a.unsigned_only ? "k_tuple" : "signed_double";
  if (!a.unsigned_only && file.graph.is_cubic()) j["lower_bound"] = cubic_lower_bound(file.graph);
  ctx.report(j);
  return r.limits_hit ? kBudget : kOk;
}

// --- sweep ------------------------------------------------------------------

struct Range {
  std::size_t lo = 0, hi = 0;
};

Range parse_range(const std::string& text, const char* what) {
  auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      std::size_t v = std::stoul(text);
      return {v, v};
    }
    return {std::stoul(text.substr(0, colon)), std::stoul(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw UsageError(std::string("bad range for ") + what + ": '" + text + "' (use A:B or A)");
  }
}

struct SweepArgs {
  std::string family = "P";
  std::string n = "3:12";
  std::string j = "2:5";
  std::string k = "1:5";
  std::string csv;
  std::size_t cap = 24;
  std::size_t samples = 1;
};

int cmd_sweep(Context& ctx, const SweepArgs& a) {
  if (a.family != "P" && a.family != "I") throw UsageError("sweep --family must be P or I");
  const Range nr = parse_range(a.n, "--n");
  const Range kr = parse_range(a.k, "--k");
  const Range jr = a.family == "P" ? Range{1, 1} : parse_range(a.j, "--j");

  std::ostringstream csv;
  csv << "n,j,k,d,case_tag,construction_size,closed_form_bound,lower_bound,solver_value,sandwich_ok\n";
  std::size_t instances = 0, solved = 0, failures = 0;
  for (std::size_t n = nr.lo; n <= nr.hi; ++n)
    for (std::size_t j = jr.lo; j <= jr.hi; ++j)
      for (std::size_t k = std::max<std::size_t>(kr.lo, 1); k <= kr.hi; ++k) {
        if (j < 1 || j > k || 2 * k >= n) continue;
        FamilyGraph f = a.family == "P" ? petersen(n, k) : igraph(n, j, k);
        ConstructionResult c = construct_for(f);
        const std::size_t bound = upper_bound(n, j, k).exact;
        const std::size_t lower = cubic_lower_bound(f.graph);
        bool ok = c.set.size() == c.claimed_size && c.claimed_size == bound && lower <= c.set.size();
        std::string solver_value, sandwich = "na";
        if (f.graph.vertex_count() <= a.cap && a.samples > 0) {
          std::size_t worst = 0;
          bool within = true;
          for (std::size_t i = 0; i < a.samples; ++i) {
            SolveLimits limits;
            limits.max_vertices = a.cap;
            auto r = min_signed_dds(random_signature(f.graph, ctx.seed + i, 0.5), limits);
            worst = std::max(worst, r.value);
            within = within && lower <= r.value && r.value <= c.set.size();
          }
          solver_value = std::to_string(worst);
          sandwich = within ? "1" : "0";
          ok = ok && within;
          ++solved;
        }
        ++instances;
        if (!ok) ++failures;
        csv << n << ',' << j << ',' << k << ',' << std::gcd(n, k) << ',' << to_string(c.case_tag) << ','
            << c.set.size() << ',' << bound << ',' << lower << ',' << solver_value << ',' << sandwich << '\n';
      }

  if (a.csv.empty() || a.csv == "-") {
    ctx.out << csv.str();
    return failures == 0 ? kOk : kNegative;
  }
  write_output(a.csv, csv.str(), ctx.out);
  ctx.report({{"csv", a.csv}, {"instances", instances}, {"solved", solved}, {"failures", failures},
              {"signatures_per_instance", a.samples}});
  return failures == 0 ? kOk : kNegative;
}

// --- balance / switch / decompose-cut ----------------------------------------

struct FileAndSet {
  std::string file;
  std::string set;
  std::string output;
};

int cmd_balance(Context& ctx, const FileAndSet& a) {
  EdgeListFile file = ctx.load(a.file);
  BalanceCertificate cert = is_balanced(file.as_signed());
  ctx.report(to_json(cert, file.family));
  return cert.balanced ? kOk : kNegative;
}

int cmd_switch(Context& ctx, const FileAndSet& a) {
  EdgeListFile file = ctx.load(a.file);
  VertexSet x = parse_vertex_set(a.set, file.graph.vertex_count(), file.family);
  SignedGraph s = switch_at(file.as_signed(), x);
  std::ostringstream text;
  write_signed_edge_list(text, s, file.family);
  write_output(a.output, text.str(), ctx.out);
  if (!a.output.empty() && a.output != "-")
    ctx.report({{"output", a.output}, {"switched", vertex_list(x.members(), file.family)},
                {"negative_edges", s.negative_edge_count()}});
  return kOk;
}

int cmd_decompose_cut(Context& ctx, const FileAndSet& a) {
  EdgeListFile file = ctx.load(a.file);
  VertexSet d = parse_vertex_set(a.set, file.graph.vertex_count(), file.family);
  Graph cut = cut_subgraph(file.graph, d);
  std::map<std::size_t, std::size_t> profile;
  for (std::size_t deg : cut.degree_sequence()) ++profile[deg];
  json prof = json::object();
  for (auto [deg, count] : profile) prof[std::to_string(deg)] = count;

  json r;
  r["cut_edges"] = cut.edge_count();
  r["cut_degree_profile"] = prof;
  r["even"] = is_even_graph(cut);
  if (is_even_graph(cut)) {
    r["cycles"] = to_json(cycle_decomposition(cut), file.family)["cycles"];
    ctx.report(r);
    return kOk;
  }
  r["cycles"] = nullptr;
  ctx.report(r);
  return kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Signed double domination toolkit: generators, verifiers, constructions, exact solver", "sddtool"};
  app.require_subcommand(1);
  app.fallthrough();

  Context ctx{args, out};
  app.add_flag("--json", ctx.json_output, "Emit the run report as JSON");
  app.add_option("--seed", ctx.seed, "Seed for every random choice")->capture_default_str();

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a P, I or K4U graph as an edge list");
  gen_cmd->add_option("family", gen.spec.family, "P, I or K4U")->required();
  gen_cmd->add_option("params", gen.spec.params, "P: n k, I: n j k, K4U: m")->required();
  gen_cmd->add_option("-o,--output", gen.output, "Output file (stdout if omitted)");

  SignArgs sign;
  auto* sign_cmd = app.add_subcommand("sign", "Attach a signature to an edge list");
  sign_cmd->add_option("graph", sign.graph_file)->required();
  sign_cmd->add_option("--mode", sign.mode, "all-positive, random or explicit")->capture_default_str();
  sign_cmd->add_option("--p", sign.p_neg, "Negative-edge probability for --mode random")->capture_default_str();
  sign_cmd->add_option("--negatives", sign.negatives_file, "File of negative edges for --mode explicit");
  sign_cmd->add_option("-o,--output", sign.output, "Output file (stdout if omitted)");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a vertex set against both DDS conditions");
  verify_cmd->add_option("graph", verify.signed_file)->required();
  verify_cmd->add_option("--set", verify.set, "Comma-separated vertices, e.g. u0,v0,u2,v2")->required();
  verify_cmd->add_flag("--unsigned", verify.unsigned_only, "Check k-tuple coverage only");
  verify_cmd->add_option("--k", verify.k, "Multiplicity for --unsigned")->capture_default_str();

  ConstructArgs construct;
  auto* construct_cmd = app.add_subcommand("construct", "Build and self-check the explicit DDS for P or I");
  construct_cmd->add_option("family", construct.spec.family, "P or I")->required();
  construct_cmd->add_option("params", construct.spec.params, "P: n k, I: n j k")->required();
  construct_cmd->add_flag("--tight", construct.tight, "Half-size set for P(2m,1) with the all-positive signature");
  construct_cmd->add_option("--samples", construct.samples, "Random signatures in the self-check")
      ->capture_default_str();

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Exact minimum double dominating set");
  solve_cmd->add_option("graph", solve.signed_file)->required();
  solve_cmd->add_option("--max-n", solve.max_n, "Refuse graphs with more vertices")->capture_default_str();
  solve_cmd->add_option("--budget", solve.budget, "Search node budget (0 = unlimited)")->capture_default_str();
  solve_cmd->add_option("--time-ms", solve.time_ms, "Wall-clock budget (0 = unlimited)")->capture_default_str();
  solve_cmd->add_option("--workers", solve.workers, "Worker threads")->capture_default_str();
  solve_cmd->add_flag("--unsigned", solve.unsigned_only, "Solve k-tuple domination, ignoring signs");
  solve_cmd->add_option("--k", solve.k, "Multiplicity for --unsigned")->capture_default_str();

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Tabulate constructions, bounds and solver values");
  sweep_cmd->add_option("--family", sweep.family, "P or I")->capture_default_str();
  sweep_cmd->add_option("--n", sweep.n, "Range A:B")->capture_default_str();
  sweep_cmd->add_option("--j", sweep.j, "Range A:B (I only)")->capture_default_str();
  sweep_cmd->add_option("--k", sweep.k, "Range A:B")->capture_default_str();
  sweep_cmd->add_option("--csv", sweep.csv, "CSV output file (stdout if omitted)");
  sweep_cmd->add_option("--cap", sweep.cap, "Largest vertex count handed to the solver")->capture_default_str();
  sweep_cmd->add_option("--samples", sweep.samples, "Random signatures solved per instance")->capture_default_str();

  FileAndSet balance;
  auto* balance_cmd = app.add_subcommand("balance", "Balance certificate of a signed graph");
  balance_cmd->add_option("graph", balance.file)->required();

  FileAndSet sw;
  auto* switch_cmd = app.add_subcommand("switch", "Switch a signed graph at a vertex set");
  switch_cmd->add_option("graph", sw.file)->required();
  switch_cmd->add_option("--set", sw.set, "Comma-separated vertices")->required();
  switch_cmd->add_option("-o,--output", sw.output, "Output file (stdout if omitted)");

  FileAndSet dc;
  auto* dc_cmd = app.add_subcommand("decompose-cut", "Cycle decomposition of the cut [D : V \\ D]");
  dc_cmd->add_option("graph", dc.file)->required();
  dc_cmd->add_option("--set", dc.set, "Comma-separated vertices")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*gen_cmd) return cmd_gen(ctx, gen);
    if (*sign_cmd) return cmd_sign(ctx, sign);
    if (*verify_cmd) return cmd_verify(ctx, verify);
    if (*construct_cmd) return cmd_construct(ctx, construct);
    if (*solve_cmd) return cmd_solve(ctx, solve);
    if (*sweep_cmd) return cmd_sweep(ctx, sweep);
    if (*balance_cmd) return cmd_balance(ctx, balance);
    if (*switch_cmd) return cmd_switch(ctx, sw);
    if (*dc_cmd) return cmd_decompose_cut(ctx, dc);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return e.kind() == ErrorKind::Infeasible ? kNegative : kUsage;
  }
  return kUsage;
}

}  // namespace sdd::cli

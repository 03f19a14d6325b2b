#include "lpakk/cli.hpp"

#include <CLI11.hpp>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lpakk/batch.hpp"
#include "lpakk/error.hpp"
#include "lpakk/graph_io.hpp"
#include "lpakk/invariants.hpp"
#include "lpakk/path_algebra.hpp"
#include "lpakk/random.hpp"
#include "lpakk/report.hpp"
#include "lpakk/sequences.hpp"
#include "lpakk/smith.hpp"

namespace lpakk::cli {

namespace {

using nlohmann::json;

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  std::string graph;
  std::string coeffs = "trivial-k1";
  long degree = 0;
  std::string format = "json";
  std::uint64_t seed = 0;
  std::size_t cases = 200;
  std::string mode = "leavitt";
  std::string expression;
  std::string transform;
  std::string splice_vertex;
};

CoefficientData load_coefficients(const std::string& source) {
  if (source == "trivial-k1" || source == "integers") return CoefficientData::profile(source);
  std::ifstream in(source);
  if (!in) throw DomainError("io_error", "cannot open coefficient file '" + source + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw DomainError("invalid_json", source + ": " + e.what());
  }
  return CoefficientData::from_json(j, std::filesystem::path(source).filename().string());
}

json envelope(const RunConfig& cfg) {
  return {{"schema", kSchemaTag},
          {"assumptions", kAssumptionBanner},
          {"command", cfg.command},
          {"seed", cfg.seed}};
}

void emit(std::ostream& out, const RunConfig& cfg, const json& report, const std::string& text) {
  if (cfg.format == "text")
    out << text;
  else
    out << report.dump(2) << '\n';
}

std::string invariants_text(const KkInvariants& inv) {
  std::ostringstream os;
  os << "KH0 = " << inv.kh0.to_string() << '\n'
     << "KH^1 = " << inv.kh1_upper.to_string() << '\n'
     << "ker(I - A^t) = " << inv.ker_transpose.to_string() << '\n'
     << "ker(I - A) = " << inv.ker_plain.to_string() << '\n'
     << "s = " << inv.sing_count << ", r = " << inv.free_rank << '\n'
     << "normal form: " << structure_form(inv).to_string() << '\n'
     << "kk-zero: " << (inv.is_kk_zero ? "yes" : "no") << '\n';
  return os.str();
}

std::string sequence_text(const ExactSeqReport& r) {
  std::ostringstream os;
  os << r.sequence_label << ": 0 -> " << r.left.to_string() << " -> M -> " << r.right.to_string()
     << " -> 0\n";
  os << "rank(M) = " << r.middle_rank << ", |M| = "
     << (r.middle_order ? r.middle_order->get_str() : std::string("infinite")) << '\n';
  if (r.middle_exact_group) os << "M = " << r.middle_exact_group->to_string() << '\n';
  if (r.claimed_middle) os << "claimed M = " << r.claimed_middle->to_string() << '\n';
  if (!r.consistent) os << "INCONSISTENT\n";
  for (const auto& n : r.notes) os << n << '\n';
  return os.str();
}

int cmd_invariants(const RunConfig& cfg, std::ostream& out) {
  const Graph g = load_graph(cfg.inputs.at(0));
  const KkInvariants inv = invariants(g);
  json r = envelope(cfg);
  r["vertex_order"] = g.vertices();
  r["invariants"] = invariants_to_json(inv);
  emit(out, cfg, r, invariants_text(inv));
  return 0;
}

int cmd_compare(const RunConfig& cfg, std::ostream& out) {
  const Graph e = load_graph(cfg.inputs.at(0));
  const Graph f = load_graph(cfg.inputs.at(1));
  const DecisionReport d = kk_equivalent(e, f);
  json r = envelope(cfg);
  r["vertex_order"] = e.vertices();
  r["vertex_order_second"] = f.vertices();
  r["decision"] = decision_to_json(d);
  std::ostringstream os;
  os << (d.equivalent ? "equivalent" : "not equivalent") << '\n'
     << "first: " << structure_form(d.first).to_string() << '\n'
     << "second: " << structure_form(d.second).to_string() << '\n';
  emit(out, cfg, r, os.str());
  return 0;
}

int cmd_sequence(const RunConfig& cfg, std::ostream& out) {
  const Graph g = load_graph(cfg.inputs.at(0));
  const CoefficientData coeffs = load_coefficients(cfg.coeffs);
  const KkInvariants inv = invariants(g);
  ExactSeqReport seq;
  if (cfg.command == "uct")
    seq = uct(inv, coeffs, cfg.degree);
  else if (cfg.command == "kunneth")
    seq = kunneth(inv, coeffs, cfg.degree);
  else if (cfg.command == "direct")
    seq = structure_direct(inv, coeffs, cfg.degree);
  else
    seq = homk0_check(inv, coeffs.at(cfg.degree));
  json r = envelope(cfg);
  r["vertex_order"] = g.vertices();
  r["coefficients"] = coeffs.label();
  r["degree"] = cfg.degree;
  r["sequence"] = sequence_to_json(seq);
  emit(out, cfg, r, sequence_text(seq));
  return 0;
}

int cmd_kkpair(const RunConfig& cfg, std::ostream& out) {
  const Graph e = load_graph(cfg.inputs.at(0));
  const Graph f = load_graph(cfg.inputs.at(1));
  const CoefficientData base = load_coefficients(cfg.coeffs);
  const ExactSeqReport seq = kk_pair(e, f, base);
  json r = envelope(cfg);
  r["vertex_order"] = e.vertices();
  r["vertex_order_second"] = f.vertices();
  r["coefficients"] = base.label();
  r["sequence"] = sequence_to_json(seq);
  emit(out, cfg, r, sequence_text(seq));
  return 0;
}

int cmd_transform(const RunConfig& cfg, std::ostream& out) {
  const Graph g = load_graph(cfg.inputs.at(0));
  Graph t;
  if (cfg.transform == "outsplit") {
    t = out_split(g);
  } else {
    if (cfg.splice_vertex.empty())
      throw DomainError("usage", "splice needs a vertex: transform <graph> splice <v>");
    t = cuntz_splice(g, cfg.splice_vertex);
  }
  out << graph_to_json(t).dump(2) << '\n';
  return 0;
}

int cmd_eval(const RunConfig& cfg, std::ostream& out) {
  const Graph g = load_graph(cfg.inputs.at(0));
  const AlgebraMode mode = cfg.mode == "cohn" ? AlgebraMode::cohn : AlgebraMode::leavitt;
  const PathAlgebra alg(g, mode);
  const AlgebraElement x = parse(cfg.expression, alg);
  json r = envelope(cfg);
  r["vertex_order"] = g.vertices();
  r["mode"] = cfg.mode;
  r["expression"] = cfg.expression;
  r["normal_form"] = x.to_string();
  emit(out, cfg, r, x.to_string() + "\n");
  return 0;
}

struct Tally {
  std::size_t passed = 0;
  std::size_t failed = 0;
  void record(bool ok) { ok ? ++passed : ++failed; }
};

int cmd_selftest(const RunConfig& cfg, std::ostream& out) {
  Rng rng(cfg.seed);
  std::map<std::string, Tally> tally;

  std::vector<Graph> graphs;
  for (std::size_t k = 0; k < cfg.cases; ++k) {
    RandomGraphOptions finite{1, 6, 3, 0.4, 0.0};
    const Graph g = random_graph(rng, finite);
    tally["out_split_invariance"].record(invariants(g) == invariants(out_split(g)));

    RandomGraphOptions mixed{1, 6, 3, 0.35, 0.15};
    const Graph h = random_graph(rng, mixed);
    const KkInvariants inv = invariants(h);
    tally["torsion_and_rank"].record(
        torsion_part(inv.kh0) == torsion_part(inv.kh1_upper) &&
        inv.kh0.rank() == inv.kh1_upper.rank() + inv.sing_count);
    graphs.push_back(h);

    std::uniform_int_distribution<std::size_t> dim(1, 8);
    const IntMatrix m = random_matrix(rng, dim(rng), dim(rng), -10, 10);
    const SnfDecomposition s = snf(m);
    bool chain = true;
    for (std::size_t i = 0; i + 1 < s.invariant_factors.size(); ++i)
      chain = chain && mpz_divisible_p(s.invariant_factors[i + 1].get_mpz_t(),
                                       s.invariant_factors[i].get_mpz_t());
    tally["smith_witness"].record(matmul(matmul(s.p, m), s.q) == s.d &&
                                  abs(determinant(s.p)) == 1 && abs(determinant(s.q)) == 1 &&
                                  chain && cokernel(s) == cokernel_via_hermite(m));

    const CoefficientData coeffs("random", {{-1, random_group(rng, 2, 2, 12)},
                                            {0, random_group(rng, 2, 2, 12)},
                                            {1, random_group(rng, 2, 2, 12)},
                                            {2, random_group(rng, 2, 2, 12)}});
    const long n = static_cast<long>(k % 3) - 1;
    const ExactSeqReport a = uct(inv, coeffs, n);
    const ExactSeqReport b = kunneth(inv, coeffs, n);
    const ExactSeqReport c = structure_direct(inv, coeffs, n);
    tally["sequence_agreement"].record(a.middle_rank == b.middle_rank && b.middle_rank == c.middle_rank &&
                                       a.middle_order == b.middle_order &&
                                       b.middle_order == c.middle_order &&
                                       homk0_check(inv, coeffs.at(n)).consistent);

    const PathAlgebra alg(g, AlgebraMode::cohn);
    bool relations = true;
    for (const auto& rel : check_relations(alg)) relations = relations && rel.holds;
    tally["path_relations"].record(relations);
  }
  tally["parallel_agreement"].record(invariants_parallel(graphs) == invariants_serial(graphs));

  bool ok = true;
  json checks = json::object();
  std::ostringstream os;
  for (const auto& [name, t] : tally) {
    ok = ok && t.failed == 0;
    checks[name] = {{"passed", t.passed}, {"failed", t.failed}};
    os << (t.failed == 0 ? "PASS " : "FAIL ") << name << " (" << t.passed << "/"
       << t.passed + t.failed << ")\n";
  }
  json r = envelope(cfg);
  r["cases"] = cfg.cases;
  r["checks"] = checks;
  r["ok"] = ok;
  emit(out, cfg, r, os.str());
  return ok ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"kk-theoretic invariants of Leavitt path algebras", "lpa-kk"};
  app.require_subcommand(1);
  const auto formats = CLI::IsMember({"json", "text"});

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(formats);
    sub->add_option("--seed", cfg.seed, "Seed recorded in the report");
  };
  auto add_coeffs = [&](CLI::App* sub) {
    sub->add_option("--coeffs", cfg.coeffs, "Coefficient JSON file or profile (trivial-k1, integers)");
  };

  auto* inv = app.add_subcommand("invariants", "KH groups, normal form and kk-zero test");
  inv->add_option("graph", cfg.graph, "Graph file (JSON or DOT)")->required();
  add_common(inv);

  auto* cmp = app.add_subcommand("compare", "Decide kk-equivalence of two graphs");
  cmp->add_option("graphs", cfg.inputs, "Two graph files")->required()->expected(2);
  add_common(cmp);

  for (const char* name : {"uct", "kunneth", "direct", "homk0"}) {
    auto* sub = app.add_subcommand(name, std::string("Exact sequence report: ") + name);
    sub->add_option("graph", cfg.graph, "Graph file")->required();
    add_coeffs(sub);
    sub->add_option("--degree", cfg.degree, "Degree n");
    add_common(sub);
  }
  app.get_subcommand("direct")->alias("structure");

  auto* pair = app.add_subcommand("kkpair", "kk(L(E), L(F)) through the Kunneth sequence");
  pair->add_option("graphs", cfg.inputs, "Graph files E and F")->required()->expected(2);
  add_coeffs(pair);
  add_common(pair);

  auto* tr = app.add_subcommand("transform", "Out-split or Cuntz-splice a graph");
  tr->add_option("graph", cfg.graph, "Graph file")->required();
  tr->add_option("kind", cfg.transform, "outsplit or splice")
      ->required()
      ->check(CLI::IsMember({"outsplit", "splice"}));
  tr->add_option("vertex", cfg.splice_vertex, "Vertex to splice at");

  auto* ev = app.add_subcommand("eval", "Normal form of a path algebra expression");
  ev->add_option("graph", cfg.graph, "Graph file")->required();
  ev->add_option("expression", cfg.expression, "Expression, e.g. \"e*f + 2 v\"")->required();
  ev->add_option("--mode", cfg.mode, "cohn or leavitt")->check(CLI::IsMember({"cohn", "leavitt"}));
  add_common(ev);

  auto* st = app.add_subcommand("selftest", "Seeded randomized consistency checks");
  st->add_option("--cases", cfg.cases, "Number of random cases");
  add_common(st);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << e.what() << '\n';
    return 2;
  }

  static const std::map<std::string, std::function<int(const RunConfig&, std::ostream&)>> handlers{
      {"invariants", cmd_invariants}, {"compare", cmd_compare},   {"uct", cmd_sequence},
      {"kunneth", cmd_sequence},      {"direct", cmd_sequence},   {"homk0", cmd_sequence},
      {"kkpair", cmd_kkpair},         {"transform", cmd_transform}, {"eval", cmd_eval},
      {"selftest", cmd_selftest}};
  cfg.command = app.get_subcommands().front()->get_name();
  if (!cfg.graph.empty()) cfg.inputs.insert(cfg.inputs.begin(), cfg.graph);

  try {
    return handlers.at(cfg.command)(cfg, out);
  } catch (const DomainError& e) {
    if (e.code() == "usage") {
      err << "error: usage: " << e.what() << '\n';
      return 2;
    }
    err << "error: " << e.code() << ": " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace lpakk::cli

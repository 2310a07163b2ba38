#include "ndl/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "ndl/edge_list.hpp"
#include "ndl/error.hpp"
#include "ndl/experiments.hpp"
#include "ndl/factors.hpp"
#include "ndl/generators.hpp"
#include "ndl/hamiltonize.hpp"
#include "ndl/json_io.hpp"
#include "ndl/mixing.hpp"
#include "ndl/permanent.hpp"
#include "ndl/rng.hpp"
#include "ndl/spectral.hpp"

namespace ndl {
namespace {

struct Options {
  std::string input;
  std::string family;
  int q = 0;
  int n = 0;
  int d = 0;
  std::vector<int> set;
  std::uint64_t seed = 0;
  double epsilon = 0.1;
  double budget_constant = 10.0;
  std::string format = "text";
  std::optional<int> size_cap;
  std::string output;

  // mixing
  int samples = 1000;
  double lambda_scale = 1.0;
  std::vector<int> x;
  std::vector<int> y;
  // permanent
  int threads = 1;
  // count
  std::string what;
  int k = 0;
  std::vector<int> cycle;
  // phi
  std::optional<int> phi_k;
  std::optional<int> estimate_t;
  // hamiltonize
  std::uint64_t factor_seed = 0;
  // experiment
  std::string experiment;
  double p = 0.5;
  long long m = 0;
  int trials = 1000;
  int n_min = 10;
  int n_max = 20;
  std::vector<int> degrees{4, 6};
};

// Usage problems detected after CLI11 parsing succeeded.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("-o,--output", o.output, "Write output to this file instead of stdout");
  sub->add_option("--size-cap", o.size_cap, "Lower every exponential-operation cap to this vertex count");
  sub->add_option("--seed", o.seed, "Seed for every randomized path");
}

void add_graph_input(CLI::App* sub, Options& o, bool positional = true) {
  if (positional) sub->add_option("input", o.input, "Edge-list file");
  sub->add_option("--family", o.family, "paley | random-regular | complete | cycle | petersen | circulant");
  sub->add_option("--q", o.q, "Paley prime q = 1 mod 4");
  sub->add_option("--n", o.n, "Vertex count");
  sub->add_option("--d", o.d, "Degree (random-regular)");
  sub->add_option("--set", o.set, "Circulant connection set")->delimiter(',');
  sub->add_option("--epsilon", o.epsilon, "Condition (1) exponent slack");
  sub->add_option("--budget-constant", o.budget_constant, "Rotation budget constant C");
}

GraphFamilySpec family_spec(const Options& o) {
  switch (parse_family(o.family)) {
    case Family::Paley: return GraphFamilySpec::paley(o.q);
    case Family::RandomRegular: return GraphFamilySpec::random_regular(o.n, o.d, o.seed);
    case Family::Complete: return GraphFamilySpec::complete(o.n);
    case Family::Cycle: return GraphFamilySpec::cycle(o.n);
    case Family::Petersen: return GraphFamilySpec::petersen();
    case Family::Circulant: return GraphFamilySpec::circulant(o.n, o.set);
  }
  throw UsageError("unknown family");
}

Graph load_graph(const Options& o) {
  const bool from_file = !o.input.empty();
  const bool from_family = !o.family.empty();
  if (from_file == from_family) throw UsageError("give exactly one of an edge-list file or --family");
  return from_file ? read_edge_list_file(o.input) : generate(family_spec(o));
}

SizeCaps caps_of(const Options& o) {
  const SizeCaps& base = SizeCaps::from_environment();
  return o.size_cap ? base.lowered_to(*o.size_cap) : base;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string checks_text(const std::vector<InequalityCheck>& checks) {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.holds ? "ok   " : "FAIL ") << (c.asserted ? "" : "(reported) ") << c.name << "  [" << c.lhs
        << (c.greater ? " >= " : " <= ") << c.rhs << (c.log_domain ? ", log" : "") << "]\n";
  }
  return out.str();
}

std::string certificate_text(const NdlCertificate& c) {
  std::ostringstream out;
  out << std::setprecision(10);
  out << "n " << c.n << "\nd " << c.d << "\nlambda " << c.lambda << "\neigenvalue_ratio " << c.eigenvalue_ratio
      << "\ncond1_margin " << c.cond1_margin << "\ncond2_ratio " << c.cond2_ratio
      << "\nconnected " << (c.connected ? "true" : "false") << "\nepsilon " << c.epsilon << "\n";
  return out.str();
}

struct Outcome {
  std::string text;
  int code = kExitOk;
};

void require_json_or_text(const Options& o, const char* what) {
  if (o.format == "csv") throw UsageError(std::string(what) + " has no CSV form");
}

Outcome do_gen(const Options& o) {
  if (!o.input.empty() || o.family.empty()) throw UsageError("gen needs --family");
  return {write_edge_list(generate(family_spec(o)))};
}

Outcome do_certify(const Options& o) {
  const NdlCertificate c = certify(load_graph(o), o.epsilon);
  if (o.format == "json") return {dump(to_json(c))};
  if (o.format == "csv") {
    std::ostringstream out;
    out << std::setprecision(17) << "index,eigenvalue\n";
    for (std::size_t i = 0; i < c.eigenvalues.size(); ++i) out << i << "," << c.eigenvalues[i] << "\n";
    return {out.str()};
  }
  return {certificate_text(c)};
}

Outcome do_mixing(const Options& o) {
  require_json_or_text(o, "mixing");
  const Graph g = load_graph(o);
  NdlCertificate c = certify(g, o.epsilon);
  if (!(o.lambda_scale > 0.0)) throw UsageError("--lambda-scale must be positive");
  c.lambda *= o.lambda_scale;
  const MixingReport r = verify_mixing(g, c, o.samples, o.seed);
  Json j = to_json(r);
  bool ok = r.violations == 0;
  if (!o.x.empty()) {
    const VertexMask x = to_mask(o.x, g.n());
    const ExpansionCheck e = expansion_check(g, c, x);
    ok = ok && e.holds;
    Json extra{{"report", j}, {"expansion", to_json(e)}};
    if (!o.y.empty()) {
      const VertexMask y = to_mask(o.y, g.n());
      const MixingDefect md = mixing_defect(g, c, x, y);
      extra["defect"] = Json{{"edges", md.edges}, {"defect", real_json(md.defect)}, {"bound", real_json(md.bound)}};
      ok = ok && md.defect <= md.bound + 1e-9;
      const double threshold = c.lambda * g.n() / c.d;
      if ((x & y) == 0 && popcount(x) > threshold && popcount(y) > threshold) {
        const bool edge = large_sets_edge(g, c, x, y);
        extra["large_sets_edge"] = edge;
        ok = ok && edge;
      }
    }
    j = extra;
  }
  if (o.format == "json") return {dump(j), ok ? kExitOk : kExitViolation};
  std::ostringstream out;
  out << "pairs_checked " << r.pairs_checked << "\nmax_normalized_defect " << r.max_normalized_defect
      << "\nviolations " << r.violations << "\n";
  return {out.str(), ok ? kExitOk : kExitViolation};
}

Outcome do_permanent(const Options& o) {
  require_json_or_text(o, "permanent");
  const Graph g = load_graph(o);
  const auto a = ZeroOneMatrix::adjacency(g);
  const BigInt per = permanent_exact(a, o.threads, caps_of(o));
  if (o.format == "text") return {per.str() + "\n"};
  return {dump(Json{{"permanent", big_json(per)}, {"bregman_upper", to_json(bregman_bound(a.row_sums()))}})};
}

Outcome do_count(const Options& o) {
  const Graph g = load_graph(o);
  const SizeCaps caps = caps_of(o);
  auto scalar = [&](const std::string& key, const std::string& value) -> Outcome {
    if (o.format == "json") return {dump(Json{{key, value}})};
    if (o.format == "csv") return {key + "\n" + value + "\n"};
    return {value + "\n"};
  };
  if (o.what == "hamilton") return scalar("h", hamilton_count_exact(g, caps).str());
  if (o.what == "matchings") return scalar("m", perfect_matching_count(g, caps).str());
  if (o.what == "weighted") return scalar("weighted_total", weighted_cycle_cover_sum(g, caps).str());
  if (o.what == "two-factors") {
    const FactorHistogram h = factor_histogram(g, caps);
    if (o.format == "json") return {dump(to_json(h))};
    if (o.format == "csv") return {histogram_csv(h)};
    std::ostringstream out;
    out << "total " << h.total << "\nweighted_total " << h.weighted_total << "\n";
    for (const auto& [s, c] : h.counts) out << "s=" << s << " " << c << "\n";
    return {out.str()};
  }
  if (o.what == "near-hamilton") {
    std::vector<int> cycle = o.cycle;
    if (cycle.empty()) {
      enumerate_hamilton_cycles(g, [&](const std::vector<int>& c) {
        if (cycle.empty()) cycle = c;
      });
      if (cycle.empty()) throw Error(ErrorKind::NotAHamiltonCycle, "graph has no Hamilton cycle");
    }
    const TwoFactor h{{cycle}};
    return scalar("count", std::to_string(two_factors_near_hamilton(g, h, o.k, caps)));
  }
  throw UsageError("count needs one of hamilton | two-factors | weighted | matchings | near-hamilton");
}

Outcome do_phi(const Options& o) {
  const Graph g = load_graph(o);
  const SizeCaps caps = caps_of(o);
  if (o.phi_k.has_value() == o.estimate_t.has_value()) throw UsageError("phi needs exactly one of --k or --estimate");
  if (o.phi_k) {
    const PhiResult r = phi_with_witness(g, *o.phi_k, caps);
    if (o.format == "text") return {r.value.str() + "\n"};
    if (o.format == "csv") return {"k,phi\n" + std::to_string(*o.phi_k) + "," + r.value.str() + "\n"};
    return {dump(Json{{"k", *o.phi_k}, {"phi", big_json(r.value)}, {"maximizer", mask_json(r.maximizer)}})};
  }
  const PhiEstimateReport r = phi_estimate_report(g, *o.estimate_t, o.epsilon, caps);
  const int code = r.all_asserted_hold() ? kExitOk : kExitViolation;
  if (o.format == "json") return {dump(to_json(r)), code};
  if (o.format == "csv") return {checks_csv(r.checks), code};
  return {checks_text(r.checks), code};
}

Outcome do_hamiltonize(const Options& o) {
  require_json_or_text(o, "hamiltonize");
  const Graph g = load_graph(o);
  const NdlCertificate c = certify(g, o.epsilon);
  const std::vector<TwoFactor> factors = all_two_factors(g, caps_of(o));
  if (factors.empty()) return {"graph has no 2-factor\n", kExitViolation};
  Rng rng(o.factor_seed);
  const TwoFactor& f = factors[static_cast<std::size_t>(rng.below(factors.size()))];
  const RotationTrace t = two_factor_to_hamilton(g, f, c, o.budget_constant);
  // A successful trace must survive an independent replay.
  const ReplayResult replayed = replay(g, f, t);
  const int code = !t.success || replayed.hamilton_cycle ? kExitOk : kExitViolation;
  if (o.format == "json") return {dump(Json{{"two_factor", to_json(f)}, {"trace", to_json(t)}}), code};
  std::ostringstream out;
  out << "success " << (t.success ? "true" : "false") << "\nreplacements " << t.replacements << "\nbudget " << t.budget
      << "\n";
  if (!t.success) out << "failure " << t.failure << "\n";
  return {out.str(), code};
}

Outcome do_report(const Options& o) {
  const BoundsReport r = bounds_report(load_graph(o), o.epsilon, o.budget_constant, caps_of(o));
  const int code = r.all_asserted_hold() ? kExitOk : kExitViolation;
  if (o.format == "json") return {dump(to_json(r)), code};
  if (o.format == "csv") return {checks_csv(r.checks), code};
  std::ostringstream out;
  out << "n " << r.n << "  d " << r.d << "  lambda " << r.lambda << "\n";
  if (r.exact.permanent) out << "per(A) " << *r.exact.permanent << "\n";
  if (r.exact.h) out << "h(G) " << *r.exact.h << "\n";
  if (r.exact.f_total) out << "f(G) " << *r.exact.f_total << "\n";
  if (r.exact.m) out << "m(G) " << *r.exact.m << "\n";
  out << checks_text(r.checks);
  return {out.str(), code};
}

Outcome do_tail(const Options& o) {
  const TailDiagnostics t = tail_diagnostics(load_graph(o), caps_of(o));
  if (t.head_weighted + t.tail_weight != t.weighted_total) return {dump(to_json(t)), kExitViolation};
  if (o.format == "json") return {dump(to_json(t))};
  if (o.format == "csv") {
    std::string out = "s_star,head_weight,head_weighted,tail_weight,weighted_total,tail_empty\n";
    out += (t.s_star ? std::to_string(*t.s_star) : std::string()) + "," + t.head_weight.str() + "," +
           t.head_weighted.str() + "," + t.tail_weight.str() + "," + t.weighted_total.str() + "," +
           (t.tail_empty ? "1" : "0") + "\n";
    return {out};
  }
  std::ostringstream out;
  out << "head_weight " << t.head_weight << "\ntail_weight " << t.tail_weight << "\n" << t.note << "\n";
  return {out.str()};
}

Outcome do_experiment(const Options& o) {
  const SizeCaps caps = caps_of(o);
  if (o.experiment == "janson-gnp" || o.experiment == "janson-gnm") {
    const LogExpectation e =
        o.experiment == "janson-gnp" ? janson_expectation_gnp(o.n, o.p) : janson_expectation_gnm(o.n, o.m);
    if (o.format == "json") return {dump(to_json(e))};
    std::ostringstream out;
    out << std::setprecision(12) << e.value() << "\n";
    return {o.format == "csv" ? "value\n" + out.str() : out.str()};
  }
  if (o.experiment == "monte-carlo") {
    const MonteCarloResult r = monte_carlo_gnp(o.n, o.p, o.trials, o.seed, caps);
    if (o.format == "json") return {dump(to_json(r))};
    std::ostringstream out;
    out << std::setprecision(10);
    if (o.format == "csv") {
      out << "n,p,trials,seed,empirical_mean,sample_stddev,expectation\n"
          << r.n << "," << r.p << "," << r.trials << "," << r.seed << "," << r.empirical_mean << ","
          << r.sample_stddev << "," << r.expectation << "\n";
    } else {
      out << "mean " << r.empirical_mean << "\nexpectation " << r.expectation << "\n";
      if (r.ratio) out << "ratio " << *r.ratio << "\n";
    }
    return {out.str()};
  }
  if (o.experiment == "trend") {
    const auto rows = hamilton_trend(o.n_min, o.n_max, o.degrees, o.seed, caps);
    if (o.format == "json") {
      Json j = Json::array();
      for (const auto& r : rows) j.push_back(to_json(r));
      return {dump(j)};
    }
    return {trend_csv(rows)};
  }
  throw UsageError("experiment needs one of janson-gnp | janson-gnm | monte-carlo | trend");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Spectral certificates, permanents, 2-factors and Hamilton cycles of (n,d,lambda)-graphs", "ndl"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "Generate a graph and write its edge list");
  add_graph_input(gen, o, false);
  auto* cert = app.add_subcommand("certify", "Spectral (n,d,lambda) certificate");
  add_graph_input(cert, o);
  auto* mix = app.add_subcommand("mixing", "Check the expander mixing lemma");
  add_graph_input(mix, o);
  mix->add_option("--samples", o.samples, "Random set pairs beyond singletons and (V,V)");
  mix->add_option("--lambda-scale", o.lambda_scale, "Multiply the certified lambda (negative controls)");
  mix->add_option("--x", o.x, "Vertex set X for the expansion check")->delimiter(',');
  mix->add_option("--y", o.y, "Vertex set Y for the pair checks")->delimiter(',');
  auto* per = app.add_subcommand("permanent", "Exact permanent of the adjacency matrix");
  add_graph_input(per, o);
  per->add_option("--threads", o.threads, "Worker threads");
  auto* count = app.add_subcommand("count", "Exact counts");
  count->add_option("what", o.what, "hamilton | two-factors | weighted | matchings | near-hamilton")->required();
  add_graph_input(count, o);
  count->add_option("--k", o.k, "Distance for near-hamilton");
  count->add_option("--cycle", o.cycle, "Hamilton cycle for near-hamilton")->delimiter(',');
  auto* phi_cmd = app.add_subcommand("phi", "phi(G,k) or the phi(G,n-t) estimate");
  add_graph_input(phi_cmd, o);
  phi_cmd->add_option("--k", o.phi_k, "Subset size");
  phi_cmd->add_option("--estimate", o.estimate_t, "Removed-set size t");
  auto* ham = app.add_subcommand("hamiltonize", "Convert a 2-factor into a Hamilton cycle by rotations");
  add_graph_input(ham, o);
  ham->add_option("--factor-seed", o.factor_seed, "Chooses the starting 2-factor");
  auto* rep = app.add_subcommand("report", "Exact counts against every bound");
  add_graph_input(rep, o);
  auto* tail = app.add_subcommand("tail", "Head/tail split of the 2-factor histogram at s*");
  add_graph_input(tail, o);
  auto* exp = app.add_subcommand("experiment", "Random-graph baselines and trends");
  exp->add_option("name", o.experiment, "janson-gnp | janson-gnm | monte-carlo | trend")->required();
  exp->add_option("--n", o.n, "Vertex count");
  exp->add_option("--p", o.p, "Edge probability");
  exp->add_option("--m", o.m, "Edge count");
  exp->add_option("--trials", o.trials, "Monte Carlo trials");
  exp->add_option("--n-min", o.n_min, "Smallest n of the trend");
  exp->add_option("--n-max", o.n_max, "Largest n of the trend");
  exp->add_option("--degrees", o.degrees, "Degrees of the trend")->delimiter(',');
  for (auto* sub : {gen, cert, mix, per, count, phi_cmd, ham, rep, tail, exp}) add_common(sub, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  Outcome result;
  try {
    const std::string name = app.get_subcommands().front()->get_name();
    if (name == "gen") result = do_gen(o);
    else if (name == "certify") result = do_certify(o);
    else if (name == "mixing") result = do_mixing(o);
    else if (name == "permanent") result = do_permanent(o);
    else if (name == "count") result = do_count(o);
    else if (name == "phi") result = do_phi(o);
    else if (name == "hamiltonize") result = do_hamiltonize(o);
    else if (name == "report") result = do_report(o);
    else if (name == "tail") result = do_tail(o);
    else result = do_experiment(o);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (o.output.empty()) {
    out << result.text;
  } else {
    std::ofstream file(o.output, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << o.output << "\n";
      return kExitUsage;
    }
    file << result.text;
  }
  return result.code;
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace ndl

#include "ndl/json_io.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace ndl {
namespace {

std::string csv_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::ostringstream out;
  out << std::setprecision(17) << x;
  return out.str();
}

Json checks_json(const std::vector<InequalityCheck>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) out.push_back(to_json(c));
  return out;
}

template <typename T>
Json optional_json(const std::optional<T>& x) {
  if (!x) return nullptr;
  if constexpr (std::is_same_v<T, BigInt>) {
    return big_json(*x);
  } else if constexpr (std::is_same_v<T, double>) {
    return real_json(*x);
  } else {
    return to_json(*x);
  }
}

}  // namespace

Json real_json(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

Json big_json(const BigInt& x) { return x.str(); }

Json mask_json(VertexMask m) {
  Json out = Json::array();
  for (int v : to_vertices(m)) out.push_back(v);
  return out;
}

Json to_json(const NdlCertificate& c) {
  Json eig = Json::array();
  for (double x : c.eigenvalues) eig.push_back(real_json(x));
  return Json{{"n", c.n},
              {"d", c.d},
              {"lambda", real_json(c.lambda)},
              {"eigenvalues", eig},
              {"eigenvalue_ratio", real_json(c.eigenvalue_ratio)},
              {"cond1_margin", real_json(c.cond1_margin)},
              {"cond2_ratio", real_json(c.cond2_ratio)},
              {"connected", c.connected},
              {"epsilon", real_json(c.epsilon)}};
}

Json to_json(const MixingReport& r) {
  return Json{{"pairs_checked", r.pairs_checked},
              {"max_normalized_defect", real_json(r.max_normalized_defect)},
              {"worst_pair", Json::array({mask_json(r.worst_pair.first), mask_json(r.worst_pair.second)})},
              {"violations", r.violations}};
}

Json to_json(const ExpansionCheck& e) {
  return Json{{"observed", e.observed},
              {"required", real_json(e.required)},
              {"applicable", e.applicable},
              {"holds", e.holds}};
}

Json to_json(const LogBound& b) {
  return Json{{"log_value", real_json(b.value)},
              {"kind", std::string(to_string(b.kind))},
              {"source", std::string(to_string(b.source))},
              {"zero", b.zero}};
}

Json to_json(const FactorHistogram& h) {
  Json counts = Json::object();
  for (const auto& [s, c] : h.counts) counts[std::to_string(s)] = big_json(c);
  Json weighted = Json::object();
  for (const auto& [s, c] : h.weighted_counts) weighted[std::to_string(s)] = big_json(c);
  return Json{{"counts", counts},
              {"total", big_json(h.total)},
              {"weighted_total", big_json(h.weighted_total)},
              {"weighted_counts", weighted}};
}

Json to_json(const TwoFactor& f) {
  Json out = Json::array();
  for (const auto& comp : f.components) out.push_back(comp);
  return out;
}

Json to_json(const RotationTrace& t) {
  Json trace = Json::array();
  for (const auto& rec : t.trace) {
    trace.push_back(Json{{"op", rec.op == TraceRecord::Op::Delete ? "delete" : "insert"}, {"u", rec.u}, {"v", rec.v}});
  }
  Json out{{"success", t.success},
           {"hamilton_cycle", t.hamilton_cycle},
           {"replacements", t.replacements},
           {"per_merge_replacements", t.per_merge_replacements},
           {"budget", t.budget},
           {"trace", trace}};
  if (!t.success) out["failure"] = t.failure;
  return out;
}

Json to_json(const InequalityCheck& c) {
  return Json{{"name", c.name},
              {"relation", c.greater ? ">=" : "<="},
              {"lhs", real_json(c.lhs)},
              {"rhs", real_json(c.rhs)},
              {"log_domain", c.log_domain},
              {"asserted", c.asserted},
              {"holds", c.holds}};
}

Json to_json(const BoundsReport& r) {
  Json exact{{"permanent", optional_json(r.exact.permanent)},
             {"h", optional_json(r.exact.h)},
             {"f_total", optional_json(r.exact.f_total)},
             {"f_histogram", optional_json(r.exact.f_histogram)},
             {"m", optional_json(r.exact.m)}};
  Json bounds{{"vdw_lower", real_json(r.bounds.vdw_lower.value)},
              {"vdw_lower_weak", real_json(r.bounds.vdw_lower_weak.value)},
              {"bregman_upper", real_json(r.bounds.bregman_upper.value)},
              {"regular_upper", real_json(r.bounds.regular_upper.value)},
              {"alon_friedland_upper",
               r.bounds.alon_friedland_upper ? real_json(r.bounds.alon_friedland_upper->value) : Json(nullptr)},
              {"theorem_estimate", real_json(r.bounds.theorem_estimate)}};
  Json normalized{{"h_root", optional_json(r.normalized.h_root)},
                  {"permanent_root", optional_json(r.normalized.permanent_root)},
                  {"d_over_e", real_json(r.normalized.d_over_e)},
                  {"theorem_root", real_json(r.normalized.theorem_root)},
                  {"log_gap", optional_json(r.normalized.log_gap)}};
  return Json{{"n", r.n},
              {"d", r.d},
              {"lambda", real_json(r.lambda)},
              {"certificate", to_json(r.certificate)},
              {"exact", exact},
              {"bounds", bounds},
              {"normalized", normalized},
              {"budget_constant", real_json(r.rotation_budget_constant)},
              {"rotation_distance_k", optional_json(r.rotation_distance_k)},
              {"checks", checks_json(r.checks)},
              {"all_asserted_hold", r.all_asserted_hold()}};
}

Json to_json(const TailDiagnostics& t) {
  Json s1 = Json::object();
  for (const auto& [s, v] : t.s1_of) s1[std::to_string(s)] = real_json(v);
  return Json{{"n", t.n},
              {"d", t.d},
              {"s_star", optional_json(t.s_star)},
              {"s1_of", s1},
              {"head_weight", big_json(t.head_weight)},
              {"head_weighted", big_json(t.head_weighted)},
              {"tail_weight", big_json(t.tail_weight)},
              {"tail_power_sum", big_json(t.tail_power_sum)},
              {"weighted_total", big_json(t.weighted_total)},
              {"log_tail_over_d_over_e_n", real_json(t.log_tail_over_d_over_e_n)},
              {"tail_empty", t.tail_empty},
              {"note", t.note}};
}

Json to_json(const PhiEstimateReport& r) {
  return Json{{"n", r.n},
              {"d", r.d},
              {"t", r.t},
              {"lambda", real_json(r.lambda)},
              {"removed", mask_json(r.removed)},
              {"e_removed", r.e_removed},
              {"e_cross", r.e_cross},
              {"twice_e_rest", r.twice_e_rest},
              {"average_degree_rest", real_json(r.average_degree_rest)},
              {"d1", real_json(r.d1)},
              {"f_rest", big_json(r.f_rest)},
              {"permanent_rest", big_json(r.permanent_rest)},
              {"checks", checks_json(r.checks)},
              {"all_asserted_hold", r.all_asserted_hold()}};
}

Json to_json(const LogExpectation& e) {
  return Json{{"log_value", real_json(e.log_value)}, {"value", real_json(e.value())}, {"zero", e.zero}};
}

Json to_json(const MonteCarloResult& r) {
  return Json{{"n", r.n},
              {"p", real_json(r.p)},
              {"trials", r.trials},
              {"seed", r.seed},
              {"empirical_mean", real_json(r.empirical_mean)},
              {"sample_stddev", real_json(r.sample_stddev)},
              {"expectation", real_json(r.expectation)},
              {"ratio", optional_json(r.ratio)}};
}

Json to_json(const TrendRow& r) {
  return Json{{"n", r.n},
              {"d", r.d},
              {"seed", r.seed},
              {"lambda", real_json(r.lambda)},
              {"h", big_json(r.h)},
              {"log_h", real_json(r.log_h)},
              {"theorem_estimate", real_json(r.theorem_estimate)},
              {"log_gap", real_json(r.log_gap)}};
}

std::string histogram_csv(const FactorHistogram& h) {
  std::string out = "s,count,weighted\n";
  for (const auto& [s, c] : h.counts) {
    out += std::to_string(s) + "," + c.str() + "," + h.weighted_counts.at(s).str() + "\n";
  }
  return out;
}

std::string checks_csv(const std::vector<InequalityCheck>& checks) {
  std::string out = "name,relation,lhs,rhs,log_domain,asserted,holds\n";
  for (const auto& c : checks) {
    out += "\"" + c.name + "\"," + (c.greater ? ">=" : "<=") + "," + csv_real(c.lhs) + "," + csv_real(c.rhs) + "," +
           (c.log_domain ? "1" : "0") + "," + (c.asserted ? "1" : "0") + "," + (c.holds ? "1" : "0") + "\n";
  }
  return out;
}

std::string trend_csv(const std::vector<TrendRow>& rows) {
  std::string out = "n,d,seed,lambda,h,log_h,theorem_estimate,log_gap\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n) + "," + std::to_string(r.d) + "," + std::to_string(r.seed) + "," + csv_real(r.lambda) +
           "," + r.h.str() + "," + csv_real(r.log_h) + "," + csv_real(r.theorem_estimate) + "," + csv_real(r.log_gap) +
           "\n";
  }
  return out;
}

}  // namespace ndl

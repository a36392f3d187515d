#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "pat/deterioration.hpp"
#include "pat/dominance.hpp"
#include "pat/patience.hpp"
#include "pat/sequences.hpp"
#include "pat/verify.hpp"

namespace pat {

// Wire formats. Rationals travel as strings "p/q" (or "p"); JSON numbers are
// accepted on input for integer values. Every reported quantity is exact;
// keys ending in _approx are display-only doubles.

using Json = nlohmann::json;

inline Json rational_to_json(const Rational& r) { return to_string(r); }

inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw std::invalid_argument("expected a rational as \"p/q\" string or integer, got " +
                              j.dump());
}

inline Json values_to_json(const std::vector<Rational>& values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(rational_to_json(v));
  return arr;
}

inline std::vector<Rational> values_from_json(const Json& j, std::size_t expected) {
  if (!j.is_array()) throw std::invalid_argument("\"values\" must be an array");
  if (j.size() != expected)
    throw std::invalid_argument("\"T\" disagrees with the number of values");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(rational_from_json(e));
  return out;
}

template <typename Sequence>
Json sequence_to_json(const Sequence& s) {
  return Json{{"T", s.horizon()}, {"values", values_to_json(s.values())}};
}

namespace detail_json {

inline std::vector<Rational> sequence_values_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("T") || !j.contains("values"))
    throw std::invalid_argument("a sequence needs the form {\"T\": n, \"values\": [...]}");
  if (!j.at("T").is_number_unsigned() || j.at("T").get<std::size_t>() == 0)
    throw std::invalid_argument("\"T\" must be a positive integer");
  return values_from_json(j.at("values"), j.at("T").get<std::size_t>());
}

}  // namespace detail_json

inline PrizeSequence prize_sequence_from_json(const Json& j) {
  return PrizeSequence(detail_json::sequence_values_from_json(j));
}

inline DiscountSequence discount_sequence_from_json(const Json& j) {
  return DiscountSequence(detail_json::sequence_values_from_json(j));
}

inline WeightSequence weight_sequence_from_json(const Json& j) {
  return WeightSequence(detail_json::sequence_values_from_json(j));
}

inline Json family_to_json(const DiscountFamily& family) {
  Json j;
  if (const auto* exp = std::get_if<Exponential>(&family.form())) {
    j["family"] = "exponential";
    j["a"] = rational_to_json(exp->factor);
  } else if (const auto* qh = std::get_if<QuasiHyperbolic>(&family.form())) {
    j["family"] = "quasi_hyperbolic";
    j["b"] = rational_to_json(qh->present_bias);
    j["d"] = rational_to_json(qh->delta);
  } else {
    const auto& seq = std::get<DiscountSequence>(family.form());
    j["family"] = "explicit";
    j["T"] = seq.horizon();
    j["values"] = values_to_json(seq.values());
  }
  return j;
}

/// Families carry no horizon on the wire; the caller supplies one at
/// realization time (CLI: --horizon).
inline DiscountFamily family_from_json(const Json& j, Horizon horizon) {
  if (!j.is_object() || !j.contains("family"))
    throw std::invalid_argument("a family needs a \"family\" field");
  const std::string kind = j.at("family").get<std::string>();
  if (kind == "exponential")
    return DiscountFamily::exponential(rational_from_json(j.at("a")), horizon);
  if (kind == "quasi_hyperbolic")
    return DiscountFamily::quasi_hyperbolic(rational_from_json(j.at("b")),
                                            rational_from_json(j.at("d")), horizon);
  if (kind == "explicit")
    return DiscountFamily::explicit_sequence(discount_sequence_from_json(j));
  throw std::invalid_argument("unknown family '" + kind +
                              "' (expected exponential|quasi_hyperbolic|explicit)");
}

inline Json verdict_to_json(const DominanceVerdict& v) {
  Json j{{"holds", v.holds}};
  if (v.failure_index) j["failure_index"] = *v.failure_index;
  if (v.witness_weights) j["witness_weights"] = sequence_to_json(*v.witness_weights);
  return j;
}

inline Json diagnostics_to_json(const VerdictDiagnostics& d) {
  Json j{{"alpha_x", rational_to_json(d.alpha_x)}, {"alpha_y", rational_to_json(d.alpha_y)},
         {"beta_x", rational_to_json(d.beta_x)},   {"beta_y", rational_to_json(d.beta_y)},
         {"alpha_gain", rational_to_json(d.alpha_gain)},
         {"beta_gain", rational_to_json(d.beta_gain)}};
  if (d.alpha_ratio) j["alpha_ratio"] = rational_to_json(*d.alpha_ratio);
  if (d.beta_ratio) j["beta_ratio"] = rational_to_json(*d.beta_ratio);
  if (d.alpha_ratio && d.beta_ratio) {
    Rational gap = *d.alpha_ratio - *d.beta_ratio;
    j["ratio_gap"] = rational_to_json(gap);
    j["ratio_gap_approx"] = approx(gap);
  }
  return j;
}

inline Json verdict_to_json(const PatienceVerdict& v) {
  Json j{{"holds", v.holds}};
  if (v.failing_index) j["failing_index"] = *v.failing_index;
  if (v.witness)
    j["witness"] = Json{{"x", sequence_to_json(v.witness->x)},
                        {"y", sequence_to_json(v.witness->y)}};
  if (v.diagnostics) j["diagnostics"] = diagnostics_to_json(*v.diagnostics);
  return j;
}

inline Json evaluation_to_json(const PatienceEvaluation& e) {
  return Json{{"holds", e.holds},
              {"alpha_x", rational_to_json(e.alpha_x)},
              {"alpha_y", rational_to_json(e.alpha_y)},
              {"beta_x", rational_to_json(e.beta_x)},
              {"beta_y", rational_to_json(e.beta_y)},
              {"alpha_ratio", rational_to_json(e.alpha_ratio)},
              {"beta_ratio", rational_to_json(e.beta_ratio)},
              {"normalized_x", rational_to_json(e.normalized_x)},
              {"normalized_y", rational_to_json(e.normalized_y)},
              {"gap", rational_to_json(e.gap)},
              {"gap_approx", approx(e.gap)}};
}

inline Json chain_to_json(const DeteriorationChain& chain) {
  Json steps = Json::array();
  for (const auto& s : chain.steps)
    steps.push_back(Json{{"from", s.from_index},
                         {"to", s.to_index},
                         {"amount", rational_to_json(s.amount)}});
  Json seqs = Json::array();
  for (const auto& z : chain_sequences(chain)) seqs.push_back(sequence_to_json(z));
  return Json{{"start", sequence_to_json(chain.start)},
              {"steps", std::move(steps)},
              {"sequences", std::move(seqs)}};
}

inline Json gap_report_to_json(const GapRatioReport& r) {
  Json j{{"threshold", rational_to_json(r.threshold)},
         {"ratio_sup", rational_to_json(r.ratio_sup)},
         {"ratio_sup_index", r.ratio_sup_index},
         {"adjacent_condition", r.adjacent_condition}};
  if (r.adjacent_inf) {
    j["adjacent_inf"] = rational_to_json(*r.adjacent_inf);
    j["adjacent_inf_index"] = *r.adjacent_inf_index;
  } else {
    j["adjacent_inf"] = "inf";
  }
  return j;
}

inline Json verify_report_to_json(const oracle::VerifyReport& report) {
  Json suites = Json::array();
  for (const auto& s : report.suites) {
    Json entry{{"name", s.name},
               {"pass", s.pass},
               {"checked", s.checked},
               {"instances", s.instances}};
    if (!s.detail.empty()) entry["detail"] = s.detail;
    suites.push_back(std::move(entry));
  }
  return Json{{"rng", report.rng_algorithm},
              {"seed", report.config.seed},
              {"trials", report.config.trials},
              {"tmax", report.config.horizon_max},
              {"grid", report.config.grid_denominator},
              {"pass", report.pass},
              {"suites", std::move(suites)}};
}

}  // namespace pat

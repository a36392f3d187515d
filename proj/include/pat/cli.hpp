#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "pat/json_io.hpp"
#include "pat/oracle.hpp"
#include "pat/verify.hpp"

namespace pat::cli {

// One subcommand per library operation. Exit codes: 0 the relation/property
// holds, 1 it fails (the JSON carries the witness), 2 usage or input error
// (machine-readable error object on standard error). Inputs are inline JSON,
// @file, or - for standard input.

namespace detail_cli {

inline std::string load_text(const std::string& arg, std::istream& in) {
  if (arg == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream file(arg.substr(1));
    if (!file) throw std::invalid_argument("cannot open file '" + arg.substr(1) + "'");
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
  }
  return arg;
}

inline Json load_json(const std::string& arg, std::istream& in) {
  return Json::parse(load_text(arg, in));
}

inline std::optional<Horizon> parse_horizon(const std::string& flag) {
  if (flag.empty()) return std::nullopt;
  if (flag == "inf" || flag == "infinite") return Horizon::infinite();
  std::size_t pos = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(flag, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("--horizon must be a positive integer or 'inf'");
  }
  if (pos != flag.size() || value == 0)
    throw std::invalid_argument("--horizon must be a positive integer or 'inf'");
  return Horizon::finite(static_cast<std::size_t>(value));
}

/// A discount input is either a sequence object or a family object; families
/// are realized at --horizon (explicit families carry their own).
inline DiscountSequence resolve_discount(const Json& j, const std::optional<Horizon>& horizon) {
  if (j.is_object() && j.contains("family")) {
    if (j.at("family") == "explicit" && !horizon) return discount_sequence_from_json(j);
    if (!horizon)
      throw std::invalid_argument("a parametric family needs --horizon to be realized");
    if (horizon->is_infinite())
      throw std::invalid_argument("--horizon inf is not supported by this subcommand");
    return realize(family_from_json(j, *horizon), horizon->length());
  }
  DiscountSequence seq = discount_sequence_from_json(j);
  if (horizon) {
    if (horizon->is_infinite())
      throw std::invalid_argument("an explicit sequence cannot have an infinite horizon");
    if (horizon->length() != seq.horizon())
      throw std::invalid_argument("--horizon disagrees with the sequence horizon");
  }
  return seq;
}

inline int emit(const Json& payload, int code, const std::string& output_path,
                std::ostream& out) {
  std::string text = payload.dump(2) + "\n";
  if (output_path.empty()) {
    out << text;
  } else {
    std::ofstream file(output_path);
    if (!file) throw std::invalid_argument("cannot write to '" + output_path + "'");
    file << text;
  }
  return code;
}

inline int emit_error(const std::string& code, const std::string& message, std::ostream& err) {
  err << Json{{"error", {{"code", code}, {"message", message}}}}.dump(2) << "\n";
  return 2;
}

}  // namespace detail_cli

inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
               std::ostream& err) {
  using detail_cli::emit;
  using detail_cli::load_json;
  using detail_cli::resolve_discount;

  CLI::App app{"exact dominance and comparative-patience verdicts on prize and discount sequences"};
  app.require_subcommand(1);
  std::string output_path;
  app.add_option("--output", output_path, "write the JSON result to a file instead of stdout");

  std::string x_arg, y_arg, w_arg, alpha_arg, beta_arg, horizon_arg;
  std::string b_arg, a_arg, suite = "all";
  std::size_t T_arg = 0;
  oracle::TrialConfig config{42, 1000, 6, 6};

  auto* cmd_dominates = app.add_subcommand("dominates", "partial-sum dominance of x over y");
  cmd_dominates->add_option("--x", x_arg, "prize sequence JSON")->required();
  cmd_dominates->add_option("--y", y_arg, "prize sequence JSON")->required();

  auto* cmd_superior = app.add_subcommand(
      "superior", "is x weakly preferred to y by every decreasing weight sequence");
  cmd_superior->add_option("--x", x_arg)->required();
  cmd_superior->add_option("--y", y_arg)->required();

  auto* cmd_tighten = app.add_subcommand(
      "tighten", "trim a dominating x to match y's total while preserving dominance");
  cmd_tighten->add_option("--x", x_arg)->required();
  cmd_tighten->add_option("--y", y_arg)->required();

  auto* cmd_chain = app.add_subcommand(
      "chain", "decompose a positive equal-sum dominating pair into binary deteriorations");
  cmd_chain->add_option("--x", x_arg)->required();
  cmd_chain->add_option("--y", y_arg)->required();
  cmd_chain->add_option("--alpha", alpha_arg, "optional discounter: include the ratio trace");
  cmd_chain->add_option("--beta", beta_arg, "optional discounter: include the ratio trace");
  cmd_chain->add_option("--horizon", horizon_arg);

  auto* cmd_eval = app.add_subcommand(
      "eval", "evaluate a weighted sum (--w --x) or a patience instance (--alpha --beta --x --y)");
  cmd_eval->add_option("--w", w_arg, "weight sequence JSON");
  cmd_eval->add_option("--x", x_arg);
  cmd_eval->add_option("--y", y_arg);
  cmd_eval->add_option("--alpha", alpha_arg);
  cmd_eval->add_option("--beta", beta_arg);
  cmd_eval->add_option("--horizon", horizon_arg);

  auto* cmd_serene = app.add_subcommand("serene", "is the alpha agent more serene than beta");
  cmd_serene->add_option("--alpha", alpha_arg)->required();
  cmd_serene->add_option("--beta", beta_arg)->required();
  cmd_serene->add_option("--horizon", horizon_arg);

  auto* cmd_patient = app.add_subcommand("patient", "is the alpha agent more patient than beta");
  cmd_patient->add_option("--alpha", alpha_arg)->required();
  cmd_patient->add_option("--beta", beta_arg)->required();
  cmd_patient->add_option("--horizon", horizon_arg,
                          "horizon to realize families at; 'inf' for parametric pairs");

  auto* cmd_counterexample = app.add_subcommand(
      "counterexample", "construct a verified violating pair when patience fails");
  cmd_counterexample->add_option("--alpha", alpha_arg)->required();
  cmd_counterexample->add_option("--beta", beta_arg)->required();
  cmd_counterexample->add_option("--horizon", horizon_arg);

  auto* cmd_threshold = app.add_subcommand(
      "threshold", "exponential factor bound above which patience over factor b holds");
  cmd_threshold->add_option("--b", b_arg, "rational factor in (0,1)")->required();
  cmd_threshold->add_option("--T", T_arg, "finite horizon >= 2")->required();

  auto* cmd_collapse = app.add_subcommand(
      "collapse", "infinite-horizon exponential comparison: first failing period, if any");
  cmd_collapse->add_option("--a", a_arg, "Alice's factor")->required();
  cmd_collapse->add_option("--b", b_arg, "Bob's factor")->required();

  auto* cmd_verify = app.add_subcommand("verify", "run the definitional oracle suites");
  cmd_verify->add_option("--suite", suite, "dominance|serenity|patience|relation|all");
  cmd_verify->add_option("--seed", config.seed);
  cmd_verify->add_option("--trials", config.trials);
  cmd_verify->add_option("--tmax", config.horizon_max);
  cmd_verify->add_option("--grid", config.grid_denominator);

  // lets --output appear after the subcommand as well as before it
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    return detail_cli::emit_error("usage", e.what(), err);
  }

  try {
    std::optional<Horizon> horizon = detail_cli::parse_horizon(horizon_arg);

    if (app.got_subcommand(cmd_dominates) || app.got_subcommand(cmd_superior)) {
      PrizeSequence x = prize_sequence_from_json(load_json(x_arg, in));
      PrizeSequence y = prize_sequence_from_json(load_json(y_arg, in));
      DominanceVerdict v = app.got_subcommand(cmd_superior) ? is_superior(x, y) : dominates(x, y);
      return emit(verdict_to_json(v), v.holds ? 0 : 1, output_path, out);
    }

    if (app.got_subcommand(cmd_tighten)) {
      PrizeSequence x = prize_sequence_from_json(load_json(x_arg, in));
      PrizeSequence y = prize_sequence_from_json(load_json(y_arg, in));
      // built before the JSON literal: a throw inside a braced-init list
      // would leak the already-constructed temporaries
      Json trimmed = sequence_to_json(tighten(x, y));
      return emit(Json{{"x_tilde", std::move(trimmed)}}, 0, output_path, out);
    }

    if (app.got_subcommand(cmd_chain)) {
      PrizeSequence x = prize_sequence_from_json(load_json(x_arg, in));
      PrizeSequence y = prize_sequence_from_json(load_json(y_arg, in));
      DeteriorationChain chain = decompose(x, y);
      Json payload = chain_to_json(chain);
      if (!alpha_arg.empty() || !beta_arg.empty()) {
        if (alpha_arg.empty() || beta_arg.empty())
          throw std::invalid_argument("the ratio trace needs both --alpha and --beta");
        DiscountSequence alpha = resolve_discount(load_json(alpha_arg, in), horizon);
        DiscountSequence beta = resolve_discount(load_json(beta_arg, in), horizon);
        Json trace = Json::array();
        for (const auto& r : ratio_trace(alpha, beta, chain))
          trace.push_back(rational_to_json(r));
        payload["trace"] = std::move(trace);
      }
      return emit(payload, 0, output_path, out);
    }

    if (app.got_subcommand(cmd_eval)) {
      if (!w_arg.empty()) {
        if (x_arg.empty()) throw std::invalid_argument("eval --w needs --x");
        WeightSequence w = weight_sequence_from_json(load_json(w_arg, in));
        PrizeSequence x = prize_sequence_from_json(load_json(x_arg, in));
        Rational value = weighted_sum(w, x);
        return emit(Json{{"value", rational_to_json(value)}, {"value_approx", approx(value)}},
                    0, output_path, out);
      }
      if (alpha_arg.empty() || beta_arg.empty() || x_arg.empty() || y_arg.empty())
        throw std::invalid_argument(
            "eval needs either --w --x or all of --alpha --beta --x --y");
      DiscountSequence alpha = resolve_discount(load_json(alpha_arg, in), horizon);
      DiscountSequence beta = resolve_discount(load_json(beta_arg, in), horizon);
      PrizeSequence x = prize_sequence_from_json(load_json(x_arg, in));
      PrizeSequence y = prize_sequence_from_json(load_json(y_arg, in));
      PatienceEvaluation eval = evaluate_patience_instance(alpha, beta, x, y);
      return emit(evaluation_to_json(eval), eval.holds ? 0 : 1, output_path, out);
    }

    if (app.got_subcommand(cmd_serene)) {
      DiscountSequence alpha = resolve_discount(load_json(alpha_arg, in), horizon);
      DiscountSequence beta = resolve_discount(load_json(beta_arg, in), horizon);
      PatienceVerdict v = is_more_serene(alpha, beta);
      return emit(verdict_to_json(v), v.holds ? 0 : 1, output_path, out);
    }

    if (app.got_subcommand(cmd_patient)) {
      Json alpha_json = load_json(alpha_arg, in);
      Json beta_json = load_json(beta_arg, in);
      if (horizon && horizon->is_infinite()) {
        DiscountFamily alice = family_from_json(alpha_json, Horizon::infinite());
        DiscountFamily bob = family_from_json(beta_json, Horizon::infinite());
        PatienceVerdict v = infinite_family_patience(alice, bob);
        return emit(verdict_to_json(v), v.holds ? 0 : 1, output_path, out);
      }
      DiscountSequence alpha = resolve_discount(alpha_json, horizon);
      DiscountSequence beta = resolve_discount(beta_json, horizon);
      PatienceVerdict v = is_more_patient(alpha, beta);
      Json payload = verdict_to_json(v);
      if (alpha.horizon() >= 2) payload["gap_report"] = gap_report_to_json(gap_ratio_report(alpha, beta));
      return emit(payload, v.holds ? 0 : 1, output_path, out);
    }

    if (app.got_subcommand(cmd_counterexample)) {
      DiscountSequence alpha = resolve_discount(load_json(alpha_arg, in), horizon);
      DiscountSequence beta = resolve_discount(load_json(beta_arg, in), horizon);
      PatienceVerdict v = is_more_patient(alpha, beta);
      if (v.holds)
        return emit(Json{{"holds", true}}, 0, output_path, out);
      return emit(verdict_to_json(v), 1, output_path, out);
    }

    if (app.got_subcommand(cmd_threshold)) {
      Rational b = parse_rational(b_arg);
      Rational a_bar = exponential_patience_threshold(b, T_arg);
      return emit(Json{{"b", rational_to_json(b)},
                       {"T", T_arg},
                       {"a_bar", rational_to_json(a_bar)},
                       {"a_bar_approx", approx(a_bar)}},
                  0, output_path, out);
    }

    if (app.got_subcommand(cmd_collapse)) {
      Rational a = parse_rational(a_arg);
      Rational b = parse_rational(b_arg);
      auto failing = exponential_infinite_collapse(a, b);
      Json payload{{"holds", !failing.has_value()}};
      if (failing) payload["t_dagger"] = *failing;
      return emit(payload, failing ? 1 : 0, output_path, out);
    }

    if (app.got_subcommand(cmd_verify)) {
      oracle::VerifyReport report = oracle::run_verify(config, suite);
      return emit(verify_report_to_json(report), report.pass ? 0 : 1, output_path, out);
    }

    return detail_cli::emit_error("usage", "no subcommand selected", err);
  } catch (const Json::parse_error& e) {
    return detail_cli::emit_error("parse_error", e.what(), err);
  } catch (const std::invalid_argument& e) {
    return detail_cli::emit_error("invalid_input", e.what(), err);
  } catch (const std::logic_error& e) {
    return detail_cli::emit_error("internal", e.what(), err);
  }
}

}  // namespace pat::cli

#pragma once

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "reslab/arrangement.hpp"
#include "reslab/asymptotics.hpp"
#include "reslab/cache.hpp"
#include "reslab/calculus.hpp"
#include "reslab/errors.hpp"
#include "reslab/invariants.hpp"
#include "reslab/serialize.hpp"

namespace reslab::cli {

enum ExitCode : int { kOk = 0, kInternal = 1, kValidation = 2, kResource = 3 };

namespace detail {

struct Common {
  std::string family;
  std::int64_t s = 0, N = 0, n = 0;
  std::string config;
  std::string format = "json";
  std::string cache_path;
  bool no_cache = false;
  std::uint64_t guard = Guard{}.pair_limit;
};

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ValidationError("invalid JSON in " + path + ": " + e.what());
  }
}

inline Arrangement resolve_arrangement(const Common& c) {
  if (!c.config.empty()) return arrangement_from_json(read_json_file(c.config));
  if (c.family == "pairs") return build_pair_lines(c.s, c.N);
  if (c.family == "points") return coordinate_points(c.n);
  throw ValidationError("choose an arrangement with --family pairs|points or --config <file>");
}

inline std::string csv_cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

/// Prints `doc` as JSON, or as CSV: the "rows" array (header from the first
/// row's keys) when present, else key,value lines for scalar fields.
inline void emit(std::ostream& out, const std::string& format, const Json& doc) {
  if (format == "json") {
    out << doc.dump(2) << "\n";
    return;
  }
  if (doc.contains("csv")) {
    out << doc.at("csv").get<std::string>();
    return;
  }
  if (doc.contains("rows") && doc.at("rows").is_array() && !doc.at("rows").empty()) {
    const auto& rows = doc.at("rows");
    bool first = true;
    for (const auto& [k, v] : rows.front().items()) {
      out << (first ? "" : ",") << k;
      first = false;
    }
    out << "\n";
    for (const auto& row : rows) {
      first = true;
      for (const auto& [k, v] : row.items()) {
        out << (first ? "" : ",") << csv_cell(v);
        first = false;
      }
      out << "\n";
    }
    return;
  }
  out << "key,value\n";
  for (const auto& [k, v] : doc.items()) {
    if (v.is_primitive()) out << k << "," << csv_cell(v) << "\n";
  }
}

/// Memoizes JSON payloads in the persistent store when caching is on.
class Memo {
 public:
  Memo(const Common& c, std::ostream& err) {
    if (c.no_cache) return;
    std::string path = c.cache_path;
    if (path.empty()) {
      const char* env = std::getenv("RESLAB_CACHE");
      path = env && *env ? env : ".reslab-cache.jsonl";
    }
    store_ = std::make_unique<CacheStore>(path, kToolVersion, &err);
  }

  Json get_or_compute(const std::string& form, const std::string& op, const std::string& args,
                      const std::function<Json()>& compute) {
    if (!store_) return compute();
    const std::string key = cache_key(form, op, args);
    if (auto rec = store_->get(key)) return rec->value;
    Json value = compute();
    store_->put(key, value);
    return value;
  }

  void report(std::ostream& err) const {
    if (store_) err << "cache: " << store_->hits() << " hits, " << store_->misses() << " misses\n";
  }

 private:
  std::unique_ptr<CacheStore> store_;
};

inline void add_arrangement_options(CLI::App* sub, Common& c) {
  sub->add_option("--family", c.family, "Arrangement family")->check(CLI::IsMember({"pairs", "points"}));
  sub->add_option("--s", c.s, "Number of pair lines");
  sub->add_option("--N", c.N, "Projective dimension for pair lines");
  sub->add_option("--n", c.n, "Number of coordinate points");
  sub->add_option("--config", c.config, "Arrangement JSON file");
}

inline void add_output_options(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--cache", c.cache_path, "Cache file (default ./.reslab-cache.jsonl or $RESLAB_CACHE)");
  sub->add_flag("--no-cache", c.no_cache, "Disable the persistent cache");
  sub->add_option("--guard", c.guard, "Pre-minimalization pair limit per step");
}

}  // namespace detail

/// Runs the command line in-process. Results go to `out`, diagnostics and
/// cache statistics to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using detail::Common;
  Common c;
  std::uint64_t m = 0, r = 0, max_m = 0, max_r = 0, c_param = 0, b_param = 0, period = 0;
  std::string ledger_path, kind;
  bool bound_only = false;
  std::int64_t as_N = 0, as_s = 0, as_m = 0, as_t = 0, tol_bits = 30;
  std::string slack = "0";

  CLI::App app{"reslab: symbolic powers, containment and resurgence of coordinate arrangements", "reslab"};
  app.require_subcommand(1);

  auto* symbolic = app.add_subcommand("symbolic", "Minimal generators of I^(m)");
  detail::add_arrangement_options(symbolic, c);
  detail::add_output_options(symbolic, c);
  symbolic->add_option("--m", m, "Symbolic exponent")->required();

  auto* containment = app.add_subcommand("containment", "Decide I^(m) ⊆ I^r");
  detail::add_arrangement_options(containment, c);
  detail::add_output_options(containment, c);
  containment->add_option("--m", m)->required();
  containment->add_option("--r", r)->required();

  auto* alpha_cmd = app.add_subcommand("alpha", "alpha(I^(m)) by the covering integer program");
  detail::add_arrangement_options(alpha_cmd, c);
  detail::add_output_options(alpha_cmd, c);
  alpha_cmd->add_option("--m", m, "Single exponent");
  alpha_cmd->add_option("--max-m", max_m, "Tabulate m = 1..max-m");

  auto* gamma_cmd = app.add_subcommand("gamma", "Exact Waldschmidt constant with certificate");
  detail::add_arrangement_options(gamma_cmd, c);
  detail::add_output_options(gamma_cmd, c);
  gamma_cmd->add_option("--max-m", max_m, "Also report the sandwich window over m = 1..max-m");

  auto* resurgence = app.add_subcommand("resurgence", "Window for the asymptotic resurgence");
  detail::add_arrangement_options(resurgence, c);
  detail::add_output_options(resurgence, c);

  auto* evidence = app.add_subcommand("evidence", "Finite evidence for rho'_a <= c/b");
  detail::add_arrangement_options(evidence, c);
  detail::add_output_options(evidence, c);
  evidence->add_option("--c", c_param)->required();
  evidence->add_option("--b", b_param)->required();
  evidence->add_option("--max-m", max_m)->required();

  auto* derive = app.add_subcommand("derive", "Containments derivable from a fact ledger");
  detail::add_output_options(derive, c);
  derive->add_option("--ledger", ledger_path)->required();
  auto* derive_m = derive->add_option("--m", m);
  auto* derive_bound = derive->add_flag("--bound", bound_only);
  derive_m->excludes(derive_bound);
  derive->add_option("--period", period, "Use the modular scheme I^(pt+i) = (I^(p))^t I^i");

  auto* sweep = app.add_subcommand("sweep", "Containment matrix over a grid of (m, r)");
  detail::add_arrangement_options(sweep, c);
  detail::add_output_options(sweep, c);
  sweep->add_option("--max-m", max_m)->required();
  sweep->add_option("--max-r", max_r, "Defaults to max-m");

  auto* oracle = app.add_subcommand("oracle", "Cross-check generator routes and the integer program");
  detail::add_arrangement_options(oracle, c);
  detail::add_output_options(oracle, c);
  oracle->add_option("--max-m", max_m)->required();

  auto* asym = app.add_subcommand("asymptotics", "Closed-form calculators");
  asym->require_subcommand(1);
  auto* hilbert = asym->add_subcommand("hilbert", "Hilbert function formulas");
  detail::add_output_options(hilbert, c);
  hilbert->add_option("--kind", kind)
      ->required()
      ->check(CLI::IsMember({"point-power", "generic-lines", "line-power", "expected"}));
  hilbert->add_option("--N", as_N);
  hilbert->add_option("--s", as_s);
  hilbert->add_option("--m", as_m);
  hilbert->add_option("--t", as_t)->required();
  auto* g_cmd = asym->add_subcommand("g", "Largest real root of tau^3 - 3s tau + 2s");
  detail::add_output_options(g_cmd, c);
  g_cmd->add_option("--s", as_s)->required();
  g_cmd->add_option("--tolerance-bits", tol_bits, "Bracket width 2^-bits");
  auto* family = asym->add_subcommand("family", "General-lines family with C(t+N,N) = s(t+1)");
  detail::add_output_options(family, c);
  family->add_option("--N", as_N)->required();
  family->add_option("--t", as_t)->required();
  auto* explore = asym->add_subcommand("explore", "Expected-dimension alpha table against g");
  detail::add_output_options(explore, c);
  explore->add_option("--s", as_s)->required();
  explore->add_option("--max-m", as_m)->required();
  explore->add_option("--slack", slack, "Flag rows with alpha_hat/m < g_lo - slack (p/q)");

  std::vector<std::string> argv_store{"reslab"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kValidation;
  }

  try {
    const Guard guard{c.guard};
    auto memo = std::make_unique<detail::Memo>(c, err);
    Json doc;

    if (symbolic->parsed()) {
      const Arrangement a = detail::resolve_arrangement(c);
      const MonomialIdeal ideal = symbolic_power(a, m, guard);
      doc = Json{{"m", m}, {"num_generators", ideal.size()}};
      if (!ideal.is_zero()) {
        doc["alpha"] = alpha(ideal);
        doc["omega"] = omega(ideal);
      }
      doc["generators_text"] = to_string(ideal);
      doc["ideal"] = to_json(ideal);
      Json rows = Json::array();
      for (const auto& g : ideal.generators()) rows.push_back(Json{{"monomial", to_string(g)}, {"degree", g.degree()}});
      doc["rows"] = std::move(rows);
    } else if (containment->parsed()) {
      const Arrangement a = detail::resolve_arrangement(c);
      doc = memo->get_or_compute(a.canonical_form(), "containment",
                                 std::to_string(m) + "," + std::to_string(r),
                                 [&] { return to_json(containment_check(a, m, r, guard)); });
    } else if (alpha_cmd->parsed()) {
      const Arrangement a = detail::resolve_arrangement(c);
      if (m == 0 && max_m == 0) throw ValidationError("alpha needs --m or --max-m");
      const std::uint64_t lo = max_m ? 1 : m, hi = max_m ? max_m : m;
      std::optional<CoveringIlp> ilp;
      Json rows = Json::array();
      for (std::uint64_t k = lo; k <= hi; ++k) {
        Json v = memo->get_or_compute(a.canonical_form(), "alpha", std::to_string(k), [&] {
          if (!ilp) ilp.emplace(a);
          return Json(ilp->solve(k));
        });
        rows.push_back(Json{{"m", k}, {"alpha", v}});
      }
      doc = Json{{"rows", std::move(rows)}};
    } else if (gamma_cmd->parsed()) {
      const Arrangement a = detail::resolve_arrangement(c);
      doc = memo->get_or_compute(a.canonical_form(), "gamma", "", [&] { return to_json(gamma_exact(a)); });
      if (max_m) {
        doc["window"] = memo->get_or_compute(a.canonical_form(), "gamma_window", std::to_string(max_m),
                                             [&] { return to_json(gamma_window(a, max_m)); });
      }
    } else if (resurgence->parsed()) {
      const Arrangement a = detail::resolve_arrangement(c);
      doc = memo->get_or_compute(a.canonical_form(), "resurgence", "", [&] {
        const BoundInterval w = resurgence_window(a, guard);
        const MonomialIdeal ideal = radical_ideal(a, guard);
        const GammaResult g = gamma_exact(a);
        Json out = to_json(w);
        out["alpha"] = alpha(ideal);
        out["omega"] = omega(ideal);
        out["h"] = properties(a).h;
        out["gamma"] = to_json(g);
        return out;
      });
    } else if (evidence->parsed()) {
      const Arrangement a = detail::resolve_arrangement(c);
      doc = memo->get_or_compute(
          a.canonical_form(), "evidence",
          std::to_string(c_param) + "," + std::to_string(b_param) + "," + std::to_string(max_m),
          [&] { return to_json(noetherian_evidence(a, c_param, b_param, max_m, guard)); });
    } else if (derive->parsed()) {
      const FactLedger ledger = ledger_from_json(detail::read_json_file(ledger_path));
      if (bound_only) {
        doc = Json{{"bound", asymptotic_bound(ledger).str()}, {"conditional", true}, {"hypotheses", to_json(ledger)}};
      } else {
        if (m == 0) throw ValidationError("derive needs --m or --bound");
        const std::uint64_t derived = period ? periodic_derive(ledger, period, m) : knapsack_derive(ledger, m);
        doc = Json{{"m", m}, {"r", derived}, {"scheme", period ? "periodic" : "knapsack"}};
        if (period) doc["period"] = period;
        doc["conditional"] = true;
        doc["hypotheses"] = to_json(ledger);
      }
    } else if (sweep->parsed()) {
      const Arrangement a = detail::resolve_arrangement(c);
      if (max_r == 0) max_r = max_m;
      std::optional<ContainmentEngine> engine;
      Json facts = Json::array();
      std::ostringstream csv;
      csv << "m";
      for (std::uint64_t rr = 1; rr <= max_r; ++rr) csv << ",r=" << rr;
      csv << "\n";
      for (std::uint64_t mm = 1; mm <= max_m; ++mm) {
        csv << mm;
        for (std::uint64_t rr = 1; rr <= max_r; ++rr) {
          Json f = memo->get_or_compute(a.canonical_form(), "containment",
                                        std::to_string(mm) + "," + std::to_string(rr), [&] {
                                          if (!engine) engine.emplace(a, guard);
                                          return to_json(engine->check(mm, rr));
                                        });
          csv << "," << (f.at("status") == "contained" ? 1 : 0);
          facts.push_back(std::move(f));
        }
        csv << "\n";
      }
      doc = Json{{"max_m", max_m}, {"max_r", max_r}, {"facts", std::move(facts)}, {"csv", csv.str()}};
    } else if (oracle->parsed()) {
      const Arrangement a = detail::resolve_arrangement(c);
      const CoveringIlp ilp(a);
      Json rows = Json::array();
      bool all_agree = true;
      for (std::uint64_t k = 1; k <= max_m; ++k) {
        const MonomialIdeal folded = symbolic_power(a, k, guard);
        const MonomialIdeal searched = enumerate_symbolic_generators(a, k);
        const std::uint64_t ilp_alpha = ilp.solve(k);
        const bool agree = folded == searched && alpha(folded) == ilp_alpha;
        all_agree = all_agree && agree;
        rows.push_back(Json{{"m", k}, {"generators", folded.size()}, {"routes_match", folded == searched},
                            {"alpha_generators", alpha(folded)}, {"alpha_ilp", ilp_alpha}, {"agree", agree}});
      }
      doc = Json{{"all_agree", all_agree}, {"rows", std::move(rows)}};
    } else if (hilbert->parsed()) {
      BigInt v;
      if (kind == "point-power") v = point_power_hilbert(as_N, as_m, as_t);
      else if (kind == "generic-lines") v = generic_lines_hilbert(as_N, as_s, as_t);
      else if (kind == "line-power") v = line_power_hilbert_p3(as_m, as_t);
      else v = expected_symbolic_dim(as_s, as_m, as_t);
      doc = Json{{"kind", kind}, {"value", v.str()}};
    } else if (g_cmd->parsed()) {
      if (tol_bits < 1 || tol_bits > 62) throw ValidationError("--tolerance-bits must be in 1..62");
      doc = to_json(largest_root_g(as_s, Fraction(1, std::int64_t{1} << tol_bits)));
    } else if (family->parsed()) {
      doc = to_json(cor13_family(as_N, as_t));
    } else if (explore->parsed()) {
      Fraction slack_value;
      try {
        const auto slash = slack.find('/');
        slack_value = slash == std::string::npos
                          ? Fraction(std::stoll(slack))
                          : Fraction(std::stoll(slack.substr(0, slash)), std::stoll(slack.substr(slash + 1)));
      } catch (const std::logic_error&) {
        throw ValidationError("--slack must be an integer or p/q");
      }
      const ExploreTable t = conjecture_explore(as_s, as_m, slack_value);
      std::ostringstream sq;
      sq.precision(9);
      sq << t.sqrt3s;
      Json rows = Json::array();
      Json flagged = Json::array();
      for (const auto& row : t.rows) {
        rows.push_back(Json{{"m", row.m}, {"alpha_hat", row.alpha_hat}, {"alpha_hat_over_m", row.alpha_hat_over_m.str()},
                            {"g_lo", t.g.g_lo.str()}, {"g_hi", t.g.g_hi.str()}, {"sqrt3s", sq.str()}});
        if (row.below_g) flagged.push_back(row.m);
      }
      doc = Json{{"s", t.s}, {"conjectural", true}, {"below_g", std::move(flagged)}, {"rows", std::move(rows)}};
    }

    detail::emit(out, c.format, doc);
    memo->report(err);
    return kOk;
  } catch (const ResourceError& e) {
    err << "resource guard: " << e.what() << "\n";
    return kResource;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace reslab::cli

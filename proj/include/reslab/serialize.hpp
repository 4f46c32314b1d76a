#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "reslab/arrangement.hpp"
#include "reslab/asymptotics.hpp"
#include "reslab/calculus.hpp"
#include "reslab/errors.hpp"
#include "reslab/fraction.hpp"
#include "reslab/ideal.hpp"
#include "reslab/invariants.hpp"
#include "reslab/monomial.hpp"

namespace reslab {

using Json = nlohmann::ordered_json;

inline Json to_json(const Monomial& m) {
  Json out = Json::array();
  for (auto e : m.exponents()) out.push_back(e);
  return out;
}

inline Json to_json(const MonomialIdeal& ideal) {
  Json gens = Json::array();
  for (const auto& g : ideal.generators()) gens.push_back(to_json(g));
  return Json{{"num_vars", ideal.num_vars()}, {"generators", std::move(gens)}};
}

inline MonomialIdeal ideal_from_json(const Json& j) {
  try {
    const auto n = j.at("num_vars").get<std::size_t>();
    std::vector<Monomial> gens;
    for (const auto& g : j.at("generators")) gens.emplace_back(g.get<std::vector<Exponent>>());
    return minimalize(std::move(gens), n);
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("malformed ideal JSON: ") + e.what());
  }
}

inline Json to_json(const Arrangement& a) {
  Json out{{"num_vars", a.num_vars()}, {"primes", a.primes()}};
  out["labels"] = a.labels();
  return out;
}

inline Arrangement arrangement_from_json(const Json& j) {
  try {
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return Arrangement(j.at("num_vars").get<std::size_t>(), j.at("primes").get<std::vector<Prime>>(),
                       std::move(labels));
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("malformed arrangement JSON: ") + e.what());
  }
}

inline Json to_json(const ContainmentFact& f) {
  return Json{{"m", f.m}, {"r", f.r}, {"status", to_string(f.status)}, {"method", to_string(f.method)}};
}

inline ContainmentFact fact_from_json(const Json& j) {
  ContainmentFact f;
  f.m = j.at("m").get<std::uint64_t>();
  f.r = j.at("r").get<std::uint64_t>();
  const auto status = j.at("status").get<std::string>();
  f.status = status == "contained" ? ContainmentStatus::contained : ContainmentStatus::not_contained;
  const auto method = j.at("method").get<std::string>();
  if (method == "generator_check") f.method = ContainmentMethod::generator_check;
  else if (method == "alpha_refutation") f.method = ContainmentMethod::alpha_refutation;
  else if (method == "m_less_r_rule") f.method = ContainmentMethod::m_less_r_rule;
  else if (method == "derived") f.method = ContainmentMethod::derived;
  else throw ValidationError("unknown containment method " + method);
  return f;
}

inline Json to_json(const BoundInterval& w) {
  return Json{{"lo", w.lo.str()}, {"hi", w.hi.str()}, {"lo_rule", w.lo_provenance}, {"hi_rule", w.hi_provenance}};
}

inline Json to_json(const GammaResult& g) {
  Json cert = Json::array();
  for (const auto& x : g.vertex) cert.push_back(x.str());
  return Json{{"value", g.value.str()},
              {"num", g.value.numerator().str()},
              {"den", g.value.denominator().str()},
              {"certificate", std::move(cert)},
              {"q", g.q.str()},
              {"alpha_at_q", g.alpha_at_q},
              {"provenance", g.provenance}};
}

inline FactLedger ledger_from_json(const Json& j) {
  try {
    std::vector<Fact> facts;
    for (const auto& f : j.at("facts")) {
      if (!f.is_array() || f.size() != 2) throw ValidationError("ledger facts must be [c, b] pairs");
      facts.push_back(Fact{f[0].get<std::uint64_t>(), f[1].get<std::uint64_t>()});
    }
    return FactLedger(std::move(facts), j.value("factorization_assumed", false));
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("malformed ledger JSON: ") + e.what());
  }
}

inline Json to_json(const FactLedger& ledger) {
  Json facts = Json::array();
  for (const auto& f : ledger.facts()) facts.push_back(Json::array({f.c, f.b}));
  return Json{{"facts", std::move(facts)}, {"factorization_assumed", ledger.factorization_assumed()}};
}

inline Json to_json(const CubicRootResult& g) {
  return Json{{"s", g.s}, {"g_lo", g.g_lo.str()}, {"g_hi", g.g_hi.str()}, {"tolerance", g.tolerance.str()}};
}

inline Json to_json(const FamilyRecord& f) {
  return Json{{"N", f.N}, {"t", f.t}, {"s", f.s}, {"alpha", f.alpha}, {"reg", f.reg},
              {"rho_a_formula", f.rho_a_formula}};
}

inline Json to_json(const NoetherianEvidence& ev) {
  Json eq = Json::array();
  for (const auto& [m, holds] : ev.equalities) eq.push_back(Json{{"m", m}, {"holds", holds}});
  Json out{{"c", ev.c}, {"b", ev.b}, {"max_m", ev.max_m}, {"equalities", std::move(eq)},
           {"containment", to_json(ev.containment)}};
  out["bound"] = ev.bound ? Json(ev.bound->str()) : Json(nullptr);
  out["status"] = ev.status;
  return out;
}

}  // namespace reslab

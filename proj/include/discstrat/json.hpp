#pragma once

// JSON encodings for reports. Rationals are "p/q" strings (integers as "p").

#include <string>
#include <vector>

#include <json.hpp>

#include "discstrat/strata.hpp"
#include "discstrat/verify.hpp"

namespace discstrat {

inline nlohmann::ordered_json to_json(const BigRational& q) { return to_string(q); }

inline nlohmann::ordered_json to_json(const CoefficientPoint& gamma) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : gamma.coords()) arr.push_back(to_string(c));
  return arr;
}

inline nlohmann::ordered_json to_json(const StratumReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["m_gcd"] = r.m_gcd;
  j["m_subdisc"] = r.m_subdisc;
  j["m_order"] = r.m_order;
  j["m_tval"] = r.m_tval;
  j["ord_D"] = r.ord_D;
  j["d_gcd"] = r.d_gcd;
  j["on_hypersurface"] = r.on_hypersurface;
  j["hypersurface_singular"] = r.hypersurface_singular;
  j["consistent"] = r.consistent;
  return j;
}

inline nlohmann::ordered_json to_json(const TrialResult& t) {
  nlohmann::ordered_json j;
  j["n"] = t.n;
  j["mu"] = t.mu.to_string();
  j["seed"] = t.seed;
  j["gamma"] = to_json(t.gamma);
  j["report"] = to_json(t.report);
  j["invariants_ok"] = t.invariants_ok;
  j["rank_ok"] = t.rank_ok;
  j["res_fact_ok"] = t.res_fact_ok;
  j["appendix_ok"] = t.appendix_ok;
  j["failure_detail"] = t.failure_detail ? nlohmann::ordered_json(*t.failure_detail) : nlohmann::ordered_json(nullptr);
  return j;
}

/// Everything except elapsed_ms is a function of (n, trials, seed).
inline nlohmann::ordered_json to_json(const SuiteReport& s, bool include_elapsed = true) {
  nlohmann::ordered_json j;
  j["n"] = s.n;
  j["trials_per_partition"] = s.trials_per_partition;
  j["seed"] = s.seed;
  j["trials"] = s.trials;
  j["passed"] = s.passed();
  auto failures = nlohmann::ordered_json::array();
  for (const auto& f : s.failures) failures.push_back(to_json(f));
  j["failures"] = std::move(failures);
  if (include_elapsed) j["elapsed_ms"] = s.elapsed.count();
  return j;
}

}  // namespace discstrat

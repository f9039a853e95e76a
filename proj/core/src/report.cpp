#include "clustercut/report.hpp"

#include <nlohmann/json.hpp>

namespace clustercut {

using ordered_json = nlohmann::ordered_json;

double SolveReport::optimum_value() const {
  if (optimum) return rat_double(*optimum);
  if (optimum_sym) return optimum_sym->value();
  return 0.0;
}

std::string report_to_json(const SolveReport& r, const CounterSnapshot* counters) {
  ordered_json j;
  if (r.optimum) {
    j["optimum_num"] = rat_num(*r.optimum).str();
    j["optimum_den"] = rat_den(*r.optimum).str();
  }
  if (r.optimum_sym && !r.optimum_sym->is_rational()) {
    const SymbolicSum& s = *r.optimum_sym;
    j["optimum_exact"] = s.str();
    ordered_json terms = ordered_json::array();
    for (const auto& [rad, c] : s.root_terms()) {
      ordered_json t;
      t["radicand"] = rad;
      t["coeff_num"] = rat_num(c).str();
      t["coeff_den"] = rat_den(c).str();
      terms.push_back(t);
    }
    ordered_json sym;
    sym["p"] = s.metric_exponent();
    sym["rational_num"] = rat_num(s.rational_part()).str();
    sym["rational_den"] = rat_den(s.rational_part()).str();
    sym["terms"] = terms;
    j["optimum_terms"] = sym;
    j["optimum_value"] = s.value();
  } else if (!r.optimum && r.optimum_sym) {
    // rational value that arrived through the symbolic path
    j["optimum_num"] = rat_num(r.optimum_sym->rational_part()).str();
    j["optimum_den"] = rat_den(r.optimum_sym->rational_part()).str();
  }
  j["witness"] = r.witness;
  j["explored"] = r.explored;
  if (counters) {
    ordered_json c;
    c["mm_scalar_mults"] = counters->mm_scalar_mults;
    c["mm_word_ops"] = counters->mm_word_ops;
    c["csp_queries"] = counters->csp_queries;
    c["csp_decompositions"] = counters->csp_decompositions;
    c["triangle_probes"] = counters->triangle_probes;
    j["counters"] = c;
  }
  return j.dump(2);
}

}  // namespace clustercut

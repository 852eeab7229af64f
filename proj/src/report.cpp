#include <nlohmann/json.hpp>
#include <sstream>

#include "hgl/scenario.hpp"

namespace hgl {

namespace {

using nlohmann::json;

std::string rat_str(const Rational& q) { return q.str(); }

json fit_json(const GrowthReport& g) {
  json j;
  j["status"] = "ok";
  j["period"] = g.period;
  j["degree"] = g.degree;
  j["stable_from"] = g.stable_from;
  j["normalized_leading_coefficient"] = rat_str(g.normalized_leading_coefficient);
  j["nlc_is_integer"] = g.nlc_is_integer;
  j["true_polynomial"] = g.is_true_polynomial;
  json classes = json::array();
  for (const auto& c : g.classes) {
    json cj;
    cj["residue"] = c.residue;
    cj["degree"] = c.degree;
    cj["stable_from"] = c.stable_from;
    json coeffs = json::array();
    for (const auto& q : c.coeffs) coeffs.push_back(rat_str(q));
    cj["coefficients"] = coeffs;
    cj["formula"] = rat_poly_str(c.coeffs);
    classes.push_back(cj);
  }
  j["classes"] = classes;
  return j;
}

json audit_json(const BoundAudit& a) {
  json j;
  j["dim"] = a.dim_value;
  j["spread"] = a.spread_value;
  j["bound"] = a.bound;
  j["satisfied"] = a.satisfied;
  j["equality_applies"] = a.equality_applies;
  j["equality_holds"] = a.equality_holds;
  j["equality_case"] = a.equality_case;
  j["attains_bound"] = a.attains_bound;
  return j;
}

}  // namespace

std::string report_json(const RunReport& report) {
  json j;
  if (!report.spec.name.empty()) j["scenario"] = report.spec.name;
  j["characteristic"] = report.spec.characteristic;

  json ring;
  ring["name"] = report.spec.ring_name;
  ring["vars"] = report.spec.vars;
  std::vector<int> w = report.spec.weights;
  if (w.empty()) w.assign(report.spec.vars.size(), 1);
  ring["weights"] = w;
  json rels = json::array();
  for (const auto& r : report.spec.relations) rels.push_back(r.text);
  ring["relations"] = rels;
  j["ring"] = ring;

  if (report.spec.functor) {
    json f;
    f["kind"] = report.spec.functor->kind;
    f["i"] = report.spec.functor->i;
    if (report.spec.functor->first) f["first"] = report.spec.functor->first->str();
    if (report.spec.functor->second) f["second"] = report.spec.functor->second->str();
    if (report.spec.compose) {
      json c;
      c["kind"] = report.spec.compose->kind;
      c["j"] = report.spec.compose->j;
      c["with"] = report.spec.compose->with;
      f["compose"] = c;
    }
    j["functor"] = f;
  }

  j["range"] = {report.spec.n0, report.spec.n1};

  json seq = json::array();
  for (size_t k = 0; k < report.seq.values.size(); ++k) {
    json e;
    e["n"] = report.seq.n0 + static_cast<long long>(k);
    if (report.seq.values[k])
      e["length"] = *report.seq.values[k];
    else
      e["length"] = "INFINITE";
    seq.push_back(e);
  }
  j["sequence"] = seq;

  if (report.fit_attempted) {
    if (report.fit)
      j["fit"] = fit_json(*report.fit);
    else
      j["fit"] = json{{"status", "no_fit"}};
  }
  if (report.audit) j["audit"] = audit_json(*report.audit);
  if (report.oracle) {
    json o;
    o["match"] = report.oracle->match;
    o["values"] = report.oracle->values;
    o["mismatch_n"] = report.oracle->mismatch_n;
    j["oracle"] = o;
  }
  return j.dump(2) + "\n";
}

std::string report_csv(const RunReport& report) {
  std::ostringstream out;
  out << "n,length\n";
  for (size_t k = 0; k < report.seq.values.size(); ++k) {
    out << (report.seq.n0 + static_cast<long long>(k)) << ",";
    if (report.seq.values[k])
      out << *report.seq.values[k];
    else
      out << "INFINITE";
    out << "\n";
  }
  if (report.fit_attempted) {
    if (report.fit) {
      const GrowthReport& g = *report.fit;
      out << "# fitted: period=" << g.period << " degree=" << g.degree
          << " stable_from=" << g.stable_from
          << " nlc=" << g.normalized_leading_coefficient.str()
          << " nlc_integer=" << (g.nlc_is_integer ? "yes" : "no") << "\n";
      for (const auto& c : g.classes)
        out << "# class " << c.residue << " mod " << g.period << ": "
            << rat_poly_str(c.coeffs) << "\n";
    } else {
      out << "# fitted: no_fit (max_period=" << report.spec.max_period << ")\n";
    }
  }
  if (report.audit) {
    const BoundAudit& a = *report.audit;
    out << "# audit: dim=" << a.dim_value << " spread=" << a.spread_value
        << " bound=" << a.bound << " satisfied=" << (a.satisfied ? "yes" : "no")
        << " equality_applies=" << (a.equality_applies ? "yes" : "no")
        << " equality_holds=" << (a.equality_holds ? "yes" : "no")
        << " attains_bound=" << (a.attains_bound ? "yes" : "no") << "\n";
  }
  if (report.oracle) {
    if (report.oracle->match) {
      out << "# oracle: match\n";
    } else {
      out << "# oracle: MISMATCH at n =";
      for (long long n : report.oracle->mismatch_n) out << " " << n;
      out << "\n";
    }
  }
  return out.str();
}

std::string probe_json(const ArtinReesProbeReport& report) {
  json j;
  j["scenario"] = "artin-rees-probe";
  json triples = json::array();
  for (const auto& t : report.triples) {
    json tj;
    tj["label"] = t.label;
    tj["certified"] = t.result.certified;
    tj["index"] = t.result.index;
    tj["window_max"] = t.result.window_max;
    tj["checked_n"] = t.result.checked_n;
    triples.push_back(tj);
  }
  j["triples"] = triples;
  return j.dump(2) + "\n";
}

std::string probe_csv(const ArtinReesProbeReport& report) {
  std::ostringstream out;
  out << "triple,certified,index,window_max,checked\n";
  for (const auto& t : report.triples) {
    out << '"' << t.label << '"' << "," << (t.result.certified ? "yes" : "no") << ","
        << t.result.index << "," << t.result.window_max << ",";
    for (size_t k = 0; k < t.result.checked_n.size(); ++k)
      out << (k ? " " : "") << t.result.checked_n[k];
    out << "\n";
  }
  return out.str();
}

}  // namespace hgl

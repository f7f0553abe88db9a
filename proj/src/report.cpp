#include "gcpoly/report.hpp"

#include <numeric>
#include <sstream>

namespace gcpoly::report {

namespace {

std::string var_name(const GVar& v, const GroupPtr& g) {
  std::string s = "x" + std::to_string(v.index);
  if (v.degree != g->identity()) s += "[" + g->name(v.degree) + "]";
  return s;
}

json evidence_json(const std::map<GVar, RingMatrix>& assign, const GroupPtr& g) {
  json e = json::object();
  for (const auto& [v, m] : assign) e[var_name(v, g)] = m.str();
  return e;
}

json character_json(const Character& chi) {
  json j;
  j["torsion"] = chi.torsion;
  j["values"] = json::object();
  for (int g = 0; g < chi.domain->order(); ++g)
    j["values"][chi.domain->name(g)] = chi.value(g).str();
  j["trivial"] = chi.is_trivial();
  return j;
}

}  // namespace

json algebra_info(const GradedMatrixAlgebra& A) {
  json j;
  j["kind"] = algebra_kind_name(A.kind);
  j["n"] = A.n;
  if (A.kind == AlgebraKind::Mab) {
    j["a"] = A.a;
    j["b"] = A.b;
  }
  json tuple = json::array();
  for (int g : A.grading.tuple) tuple.push_back(A.grading.group->name(g));
  j["tuple"] = tuple;
  j["group_order"] = A.grading.group->order();
  j["conductor"] = A.conductor;
  j["budget"] = A.budget;
  j["description"] = A.describe();
  return j;
}

json matrix_json(const RingMatrix& m) { return m.str(); }

json polynomial_json(const GPolynomial& f) { return f.str(); }

json verdict_json(const Verdict& v) {
  json j;
  j["status"] = verdict_status_name(v.status);
  if (v.value) j["value"] = v.value->str();
  if (v.partner) j["partner"] = v.partner->second.str();
  if (v.budget) {
    j["budget_note"] = {{"budget", v.budget->budget},
                        {"stable_at", v.budget->stable_at},
                        {"stable", v.budget->stable}};
  }
  return j;
}

json identity_report(const GradedMatrixAlgebra& A, const GPolynomial& f,
                     const Verdict& v, bool ordinary) {
  json j;
  j["verb"] = "check-identity";
  j["algebra"] = algebra_info(A);
  j["conductor"] = A.conductor;
  j["budget"] = A.budget;
  j["polynomial"] = f.str();
  j["ordinary"] = ordinary;
  j["identity"] = (v.status == VerdictStatus::Identity);
  j["status"] = verdict_status_name(v.status);
  if (v.status != VerdictStatus::Identity) {
    j["evidence"] = evidence_json(v.evidence, A.grading.group);
    if (v.value) j["value"] = v.value->str();
  }
  if (v.budget)
    j["budget_note"] = {{"budget", v.budget->budget},
                        {"stable_at", v.budget->stable_at},
                        {"stable", v.budget->stable}};
  return j;
}

json central_report(const GradedMatrixAlgebra& A, const GPolynomial& f,
                    const Verdict& v, bool ordinary) {
  json j;
  j["verb"] = "check-central";
  j["algebra"] = algebra_info(A);
  j["conductor"] = A.conductor;
  j["budget"] = A.budget;
  j["polynomial"] = f.str();
  j["ordinary"] = ordinary;
  j["status"] = verdict_status_name(v.status);
  j["central"] = (v.status == VerdictStatus::Central);
  if (v.status != VerdictStatus::Identity) {
    j["evidence"] = evidence_json(v.evidence, A.grading.group);
    if (v.value) j["value"] = v.value->str();
  }
  if (v.status == VerdictStatus::Neither && v.partner) {
    j["partner"] = {{"variable", var_name(v.partner->first, A.grading.group)},
                    {"value", v.partner->second.str()}};
  }
  if (v.budget)
    j["budget_note"] = {{"budget", v.budget->budget},
                        {"stable_at", v.budget->stable_at},
                        {"stable", v.budget->stable}};
  return j;
}

json classify_report(const GradedMatrixAlgebra& A, int torsion,
                     const ClassifyResult& r) {
  json j;
  j["verb"] = "classify";
  j["algebra"] = algebra_info(A);
  j["conductor"] = A.conductor;
  j["budget"] = A.budget;
  j["torsion"] = torsion;
  j["status"] = classify_status_name(r.status);
  j["aut_order"] = r.aut_order;
  j["crossed"] = r.crossed;
  json orbits = json::array();
  for (const auto& orb : r.orbits) {
    json o = json::array();
    for (int i : orb) o.push_back(i + 1);
    orbits.push_back(o);
  }
  j["orbits"] = orbits;
  j["detail"] = r.detail;
  if (r.certificate) {
    const WitnessCertificate& c = *r.certificate;
    j["certificate"] = {{"f", c.f.str()},
                        {"P", c.P.str()},
                        {"k", c.k},
                        {"lambda", character_json(c.lambda)},
                        {"note", c.note}};
  }
  return j;
}

json aut_report(const GradedMatrixAlgebra& A) {
  json j;
  j["verb"] = "aut-group";
  j["algebra"] = algebra_info(A);
  j["conductor"] = A.conductor;
  j["budget"] = A.budget;
  std::vector<Permutation> auts = graded_automorphisms(A.grading);
  json elems = json::array();
  for (const Permutation& p : auts) elems.push_back(p.str());
  j["order"] = (int)auts.size();
  j["elements"] = elems;
  json orbits = json::array();
  for (const auto& orb : orbit_partition(auts, A.n)) {
    json o = json::array();
    for (int i : orb) o.push_back(i + 1);
    orbits.push_back(o);
  }
  j["orbits"] = orbits;
  if (A.grading.pairwise_distinct()) {
    CrossedProductInfo info = is_crossed_product(A.grading);
    j["crossed"] = info.crossed;
    if (!info.crossed) j["crossed_reason"] = info.reason;
  }
  return j;
}

json witness_report(const GradedMatrixAlgebra& A, const GPolynomial& f,
                    const RingMatrix& value) {
  json j;
  j["verb"] = "witness";
  j["algebra"] = algebra_info(A);
  j["conductor"] = A.conductor;
  j["budget"] = A.budget;
  j["polynomial"] = f.str();
  j["cycle_value"] = value.str();
  return j;
}

json transform_report(const GPolynomial& f, const GPolynomial& out,
                      const Bicharacter& beta, const std::string& pairing) {
  json j;
  j["verb"] = "transform";
  j["pairing"] = pairing;
  j["group_order"] = beta.group()->order();
  int cond = 1;
  const auto& H = beta.group();
  for (int a = 0; a < H->order(); ++a)
    for (int b = 0; b < H->order(); ++b)
      cond = std::lcm(cond, beta.value(a, b).conductor());
  j["conductor"] = cond;
  j["budget"] = 0;
  j["input"] = f.str();
  j["output"] = out.str();
  return j;
}

json envelope_report(const GradedMatrixAlgebra& built, bool ok) {
  json j;
  j["verb"] = "envelope-check";
  j["algebra"] = algebra_info(built);
  j["conductor"] = built.conductor;
  j["budget"] = built.budget;
  j["tensor_description_matches"] = ok;
  return j;
}

json scan_report(const GradedMatrixAlgebra& A, int maxdeg, const ScanReport& r) {
  json j;
  j["verb"] = "primeness-scan";
  j["algebra"] = algebra_info(A);
  j["conductor"] = A.conductor;
  j["budget"] = A.budget;
  j["maxdeg"] = maxdeg;
  j["pairs"] = r.pairs;
  j["central_products"] = r.central_products;
  j["counterexample_count"] = r.counterexample_count;
  auto pair_json = [](const ScanPair& p) {
    return json{{"f", p.f.str()},
                {"g", p.g.str()},
                {"f_status", verdict_status_name(p.fstatus)},
                {"g_status", verdict_status_name(p.gstatus)}};
  };
  json ce = json::array();
  for (const ScanPair& p : r.counterexamples) ce.push_back(pair_json(p));
  j["counterexamples"] = ce;
  json cp = json::array();
  for (const ScanPair& p : r.central_pairs) cp.push_back(pair_json(p));
  j["central_pairs"] = cp;
  return j;
}

json eval_report(const GradedMatrixAlgebra& A, const GPolynomial& f,
                 const std::map<GVar, RingMatrix>& assign,
                 const RingMatrix& value) {
  json j;
  j["verb"] = "eval";
  j["algebra"] = algebra_info(A);
  j["conductor"] = A.conductor;
  j["budget"] = A.budget;
  j["polynomial"] = f.str();
  j["assignment"] = evidence_json(assign, A.grading.group);
  j["value"] = value.str();
  j["central_value"] = is_central_element(A, value);
  return j;
}

json error_report(const Error& e) {
  json j;
  j["error"] = error_code_name(e.code());
  std::string msg = e.what();
  std::string prefix = std::string(error_code_name(e.code())) + ": ";
  if (msg.rfind(prefix, 0) == 0) msg = msg.substr(prefix.size());
  j["message"] = msg;
  return j;
}

namespace {

void prose_value(std::ostream& os, const std::string& key, const json& v,
                 int indent) {
  std::string pad(indent, ' ');
  if (v.is_object()) {
    os << pad << key << ":\n";
    for (const auto& [k, sub] : v.items()) prose_value(os, k, sub, indent + 2);
  } else if (v.is_array()) {
    os << pad << key << ":";
    bool scalars = true;
    for (const auto& sub : v)
      if (sub.is_object() || sub.is_array()) scalars = false;
    if (scalars) {
      for (const auto& sub : v)
        os << " " << (sub.is_string() ? sub.get<std::string>() : sub.dump());
      os << "\n";
    } else {
      os << "\n";
      int idx = 0;
      for (const auto& sub : v)
        prose_value(os, "[" + std::to_string(idx++) + "]", sub, indent + 2);
    }
  } else if (v.is_string()) {
    os << pad << key << ": " << v.get<std::string>() << "\n";
  } else {
    os << pad << key << ": " << v.dump() << "\n";
  }
}

}  // namespace

std::string prose(const json& rep) {
  std::ostringstream os;
  for (const auto& [k, v] : rep.items()) {
    if (k == "algebra") {
      os << "algebra: " << v.value("description", std::string{}) << "\n";
      continue;
    }
    prose_value(os, k, v, 0);
  }
  return os.str();
}

}  // namespace gcpoly::report

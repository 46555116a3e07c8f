#include "negaconv/serial.hpp"

#include <sstream>

namespace negaconv {

Json field_to_json(const Field& f) {
  return Json{{"p", f.characteristic()}, {"m", f.degree()}, {"modulus", f.modulus()}};
}

Json element_to_json(const Field& f, uint32_t idx) { return Json(f.coords(idx)); }

Json poly_to_json(const Poly& p) {
  Json coeffs = Json::array();
  for (uint32_t c : p.c) coeffs.push_back(element_to_json(*p.F, c));
  return coeffs;
}

Json code_to_json(const NegacyclicCode& c, const std::string& distance_status) {
  Json j;
  j["q"] = c.ctx->q;
  j["n"] = c.n();
  j["field"] = field_to_json(*c.ctx->f2);
  j["Z"] = c.Z.residues;
  j["g"] = poly_to_json(c.g);
  j["k"] = c.k;
  j["designed_distance"] = c.designed_distance;
  j["distance_status"] = distance_status;
  return j;
}

Json poly_matrix_to_json(const PolyMatrix& g) {
  Json mats = Json::array();
  for (const Mat& m : g.mats) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows; ++i) {
      Json row = Json::array();
      for (int j = 0; j < m.cols; ++j) row.push_back(element_to_json(*g.F, m.at(i, j)));
      rows.push_back(row);
    }
    mats.push_back(rows);
  }
  return Json{{"shape", {g.rows, g.cols}}, {"mu", g.memory()}, {"mats", mats}};
}

Json quantum_to_json(const QuantumConvParams& p) {
  Json j;
  j["q"] = p.q;
  j["n"] = p.n;
  j["k"] = p.k;
  j["mu"] = p.mu;
  j["gamma"] = p.gamma;
  j["d_f"] = p.d_f;
  j["d_f_status"] = p.d_f_exact ? "exact" : "certified-lower-bound";
  j["mds"] = p.mds;
  j["purity_note"] = p.purity == Purity::kVerified ? "verified" : "assumed-per-construction";
  return j;
}

Json certificate_to_json(const VerificationCertificate& c) {
  Json checks = Json::array();
  for (const Check& ch : c.checks) {
    Json j;
    j["name"] = ch.name;
    j["method"] = ch.method;
    j["status"] = to_string(ch.status);
    j["detail"] = ch.detail;
    j["mandatory"] = ch.mandatory;
    checks.push_back(j);
  }
  return Json{{"checks", checks}, {"overall_pass", c.overall_pass()}};
}

Json instance_to_json(const FamilyInstance& inst) {
  Json j;
  j["family"] = family_name(inst.family);
  j["q"] = inst.q;
  j["i"] = inst.i;
  j["n"] = inst.n;
  j["classical"] = Json{{"n", inst.n},
                        {"k", inst.formula.dual_k},
                        {"gamma", inst.formula.gamma},
                        {"mu", inst.formula.mu},
                        {"d_f", inst.formula.d_f},
                        {"text", inst.classical_tuple_text()}};
  j["codes"] = Json{{"C2", code_to_json(inst.C2, inst.distance_status())},
                    {"C1", code_to_json(inst.C1, inst.d1.exact() ? "exact" : "bound-certified")},
                    {"C0", code_to_json(inst.C0, inst.d0.exact() ? "exact" : "bound-certified")}};
  if (inst.quantum) {
    Json qj = quantum_to_json(*inst.quantum);
    qj["text"] = inst.quantum_tuple_text();
    j["quantum"] = qj;
  }
  j["certificate"] = certificate_to_json(inst.cert);
  return j;
}

std::string table_csv(const TableReport& rep) {
  std::ostringstream os;
  os << "family,q,i,n,k,gamma,mu,d_f,status\n";
  for (const auto& r : rep.rows)
    os << family_name(r.family) << "," << r.q << "," << r.i << "," << r.n << "," << r.k << ","
       << r.gamma << "," << r.mu << "," << r.d_f << "," << r.status << "\n";
  return os.str();
}

Json table_json(const TableReport& rep) {
  Json rows = Json::array();
  for (const auto& r : rep.rows) {
    rows.push_back(Json{{"family", family_name(r.family)},
                        {"q", r.q},
                        {"i", r.i},
                        {"n", r.n},
                        {"k", r.k},
                        {"gamma", r.gamma},
                        {"mu", r.mu},
                        {"d_f", r.d_f},
                        {"status", r.status}});
  }
  Json diffs = Json::array();
  std::istringstream is(rep.diff_text());
  for (std::string line; std::getline(is, line);) diffs.push_back(line);
  return Json{{"table", rep.which}, {"rows", rows}, {"diff", diffs},
              {"unexpected", rep.unexpected}};
}

}  // namespace negaconv

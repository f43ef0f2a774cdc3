#include "qwc/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace qwc {

double round12(double x) {
  if (!std::isfinite(x)) return x;
  if (std::abs(x) < 1e-12) return 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

Json number(double x) { return round12(x); }

Json to_json(const QuadExt& x) { return Json{{"a", x.a()}, {"b", x.b()}, {"delta", x.delta()}}; }

Json quad_or_approx(const std::optional<QuadExt>& exact, double x) {
  if (exact) return to_json(*exact);
  return Json{{"approx", number(x)}};
}

namespace {

Json matrix_json(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(number(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json optional_int(const std::optional<std::int64_t>& x) { return x ? Json(*x) : Json(nullptr); }

}  // namespace

Json to_json(const SpectralDecomposition& dec, const RecognitionOptions& recog,
             bool with_projectors) {
  Json out;
  out["order"] = dec.order();
  Json values = Json::array();
  for (std::size_t i = 0; i < dec.size(); ++i) {
    const auto rec = recognize_quadext(dec.eigenvalues[i], recog);
    Json e;
    e["value"] = quad_or_approx(rec.matched() ? rec.value : std::nullopt, dec.eigenvalues[i]);
    e["numeric"] = number(dec.eigenvalues[i]);
    e["multiplicity"] = dec.multiplicities[i];
    if (with_projectors) e["projector"] = matrix_json(dec.projectors[i]);
    values.push_back(std::move(e));
  }
  out["eigenvalues"] = std::move(values);
  out["clustering_warning"] = dec.clustering_warning;
  return out;
}

Json to_json(const CoronaSpectrum& spectrum, bool with_projectors) {
  const auto& p = spectrum.params();
  Json out;
  out["params"] = Json{{"n1", p.n1}, {"n2", p.n2}, {"r1", p.r1}, {"r2", p.r2}, {"s", p.s}, {"t", p.t}};
  Json entries = Json::array();
  for (std::size_t i = 0; i < spectrum.entries().size(); ++i) {
    const auto& e = spectrum.entries()[i];
    Json j;
    j["kind"] = to_string(e.kind);
    j["value"] = quad_or_approx(e.exact, e.value);
    j["numeric"] = number(e.value);
    j["multiplicity"] = e.multiplicity;
    j["origin"] = number(e.origin);
    j["radicand"] = optional_int(e.radicand);
    if (with_projectors) j["projector"] = matrix_json(spectrum.projector(i));
    entries.push_back(std::move(j));
  }
  out["entries"] = std::move(entries);
  return out;
}

Json to_json(const PeriodicityReport& r) {
  Json out;
  if (r.vertex) out["vertex"] = *r.vertex;
  out["periodic"] = r.periodic;
  out["case"] = to_string(r.kind);
  out["delta"] = optional_int(r.delta);
  out["basis"] = to_string(r.basis);
  out["witness"] = r.witness;
  return out;
}

Json to_json(const K2Analysis& a) {
  Json out;
  out["verdict"] = to_string(a.verdict);
  out["basis"] = to_string(a.basis);
  out["base_periodic"] = a.base_periodic;
  out["delta"] = optional_int(a.delta);
  out["witness"] = a.witness;
  out["provenance"] = a.provenance;
  return out;
}

Json to_json(const PSTReport& r) {
  Json out;
  out["u"] = r.u;
  out["v"] = r.v;
  out["verdict"] = to_string(r.verdict);
  out["basis"] = to_string(r.basis);
  out["strongly_cospectral"] = r.strongly_cospectral;
  Json support = Json::array();
  for (std::size_t i = 0; i < r.support_numeric.size(); ++i) {
    Json e;
    e["value"] = quad_or_approx(r.support[i], r.support_numeric[i]);
    e["sign"] = r.signs[i];
    if (i < r.scaled_gaps.size()) {
      e["scaled_gap"] = r.scaled_gaps[i];
      e["parity"] = r.scaled_gaps[i] % 2 == 0 ? "even" : "odd";
    }
    support.push_back(std::move(e));
  }
  out["support"] = std::move(support);
  out["delta"] = optional_int(r.delta);
  out["g"] = optional_int(r.g);
  if (r.tau0) {
    out["tau0"] = number(*r.tau0);
    out["phase"] = Json{{"re", number(r.phase->real())}, {"im", number(r.phase->imag())}};
  }
  if (!r.refutation_witness.empty()) out["witness"] = r.refutation_witness;
  if (!r.refutations.empty()) {
    Json list = Json::array();
    for (const auto& [basis, witness] : r.refutations)
      list.push_back(Json{{"basis", to_string(basis)}, {"witness", witness}});
    out["refutations"] = std::move(list);
  }
  return out;
}

Json to_json(const PGSTSearchResult& r) {
  Json out;
  out["applicable"] = r.applicable;
  out["achieved"] = r.achieved;
  out["branch"] = r.branch;
  out["basis"] = r.basis;
  out["epsilon"] = number(r.target_epsilon);
  out["l_bound"] = r.l_bound;
  if (r.applicable) {
    out["l"] = r.best_l;
    out["T"] = number(r.time);
    out["fidelity"] = number(r.fidelity);
  }
  out["notes"] = r.notes;
  return out;
}

}  // namespace qwc

#include "crc/reports.hpp"

#include <sstream>

namespace crc {

Json witness_json(const AmbientSpace& ambient, const CrWitness& w) {
  Json j;
  j["reference"] = ambient.to_string(w.reference);
  j["vertex"] = ambient.to_string(w.vertex);
  j["distance_class"] = w.distance_class;
  j["direction"] = to_string(w.direction);
  j["reference_count"] = w.reference_count;
  j["vertex_count"] = w.vertex_count;
  return j;
}

Json numbers_json(const IntersectionNumbers& numbers) {
  Json j;
  j["gamma"] = numbers.gamma;
  j["alpha"] = numbers.alpha;
  j["beta"] = numbers.beta;
  return j;
}

namespace {

Json arithmetic_json(const ArithmeticCertificate& a) {
  Json j;
  j["is"] = a.arithmetic;
  j["t"] = a.t;
  j["degenerate"] = a.degenerate;
  return j;
}

Json bounds_json(const BoundsReport& b) {
  Json j;
  j["smallest_eigenvalue_slack"] = b.smallest_eigenvalue_slack ? Json(*b.smallest_eigenvalue_slack) : Json();
  j["qrt_slack"] = b.qrt_slack ? Json(*b.qrt_slack) : Json();
  return j;
}

}  // namespace

Json cr_report(const Code& c, const CrAnalysis& an) {
  Json j;
  j["n"] = c.length();
  j["q"] = c.q();
  j["size"] = c.size();
  j["cr"] = an.certificate.completely_regular;
  j["rho"] = an.certificate.rho;
  j["delta"] = an.minimum_distance ? Json(*an.minimum_distance) : Json();
  if (an.certificate.completely_regular) {
    const auto& nums = *an.certificate.numbers;
    j["gamma"] = nums.gamma;
    j["alpha"] = nums.alpha;
    j["beta"] = nums.beta;
    j["u"] = an.u->to_rows();
    j["spectrum"] = an.spectrum->eigenvalues;
    j["arithmetic"] = arithmetic_json(*an.arithmetic);
    j["bounds"] = bounds_json(*an.bounds);
  } else {
    j["witness"] = witness_json(c.ambient(), *an.certificate.witness);
  }
  return j;
}

Json spectrum_report(const CrAnalysis& an) {
  Json j;
  j["spectrum"] = an.spectrum->eigenvalues;
  j["arithmetic"] = arithmetic_json(*an.arithmetic);
  j["bounds"] = bounds_json(*an.bounds);
  return j;
}

Json array_json(const IntersectionArray& a) {
  Json j;
  j["b"] = a.b;
  j["c"] = a.c;
  return j;
}

Json graph_json(const Graph& g) {
  Json j;
  j["n"] = g.vertex_count();
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  if (!g.labels().empty()) j["labels"] = g.labels();
  return j;
}

Json drg_json(const DrgCertificate& cert) {
  Json j;
  j["distance_regular"] = cert.distance_regular;
  if (cert.array) j["array"] = array_json(*cert.array);
  if (cert.witness) {
    const DrgWitness& w = *cert.witness;
    j["witness"] = {{"reference_root", w.reference_root}, {"reference_vertex", w.reference_vertex},
                    {"root", w.root},
                    {"vertex", w.vertex},
                    {"distance", w.distance},
                    {"direction", std::string(1, w.direction)},
                    {"expected", w.expected},
                    {"observed", w.observed}};
  }
  return j;
}

Json checks_json(const std::vector<TheoremCheck>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) {
    Json j;
    j["name"] = c.name;
    j["status"] = to_string(c.status);
    if (!c.detail.empty()) j["witness"] = c.detail;
    out.push_back(std::move(j));
  }
  return out;
}

Json family_json(const QuotientFamily& family, const std::vector<TheoremCheck>& checks) {
  Json j;
  j["family"] = to_string(family.tag);
  j["name"] = family.name();
  j["params"] = family.params;
  Json evidence;
  evidence["array"] = array_json(family.array);
  if (family.isomorphism) evidence["isomorphism"] = *family.isomorphism;
  j["evidence"] = std::move(evidence);
  j["theorem_checks"] = checks_json(checks);
  return j;
}

Json product_json(const ProductCompatibility& p) {
  Json j;
  j["compatible"] = p.compatible;
  j["n1"] = p.n1;
  j["n2"] = p.n2;
  if (!p.compatible) {
    j["failing_condition"] = p.failing_condition;
    j["detail"] = p.detail;
  } else {
    j["product_rho"] = p.product_rho;
    j["product_numbers"] = numbers_json(*p.product_numbers);
  }
  return j;
}

Json decomposition_json(const ProductDecomposition& d) {
  Json j;
  j["quotient"] = d.quotient.name();
  j["blocks"] = d.blocks;
  Json factors = Json::array();
  for (std::size_t i = 0; i < d.factors.size(); ++i) {
    Json f;
    f["length"] = d.factors[i].length();
    f["size"] = d.factors[i].size();
    f["numbers"] = numbers_json(d.factor_numbers[i]);
    f["code"] = spec_from_code(d.factors[i]);
    factors.push_back(std::move(f));
  }
  j["factors"] = std::move(factors);
  j["product_verified"] = true;
  return j;
}

Json structure_json(const StructureReport& s) {
  Json j;
  Json cols;
  cols["classes"] = s.columns.classes;
  cols["representatives"] = s.columns.representatives;
  cols["uniform"] = s.columns.uniform;
  cols["gamma1"] = s.columns.gamma1 ? Json(*s.columns.gamma1) : Json();
  cols["matches_gamma1"] = s.columns.matches_gamma1;
  cols["shortened_distance"] = s.columns.shortened_distance ? Json(*s.columns.shortened_distance) : Json();
  j["column_classes"] = std::move(cols);
  j["quotient"] = s.quotient.name();
  Json cases = Json::array();
  for (const auto& c : s.cases) {
    Json k;
    k["case"] = std::string(1, c.label);
    k["gamma1"] = c.gamma1;
    k["normal_form"] = c.normal_form;
    k["verified"] = c.verified;
    cases.push_back(std::move(k));
  }
  j["cases"] = std::move(cases);
  if (!s.caveat.empty()) j["caveat"] = s.caveat;
  return j;
}

Json hamming_quotient_json(const HammingQuotientReport& r) {
  Json j;
  j["quotient"] = r.quotient.name();
  j["t"] = r.t;
  j["derived_spectrum"] = r.derived_spectrum;
  j["stripped_coordinates"] = r.stripped_coordinates;
  Json cases = Json::array();
  for (char c : r.cases) cases.push_back(std::string(1, c));
  j["cases"] = std::move(cases);
  j["structure"] = structure_json(r.structure);
  return j;
}

namespace {

bool is_scalar_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& x : j)
    if (x.is_structured() && !is_scalar_array(x)) return false;
  return true;
}

std::string scalar(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void render(std::ostringstream& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || (value.is_array() && !is_scalar_array(value))) {
        out << pad << key << ":\n";
        render(out, value, indent + 1);
      } else {
        out << pad << key << ": " << scalar(value) << '\n';
      }
    }
  } else if (j.is_array() && !is_scalar_array(j)) {
    for (const auto& item : j) {
      out << pad << "-\n";
      render(out, item, indent + 1);
    }
  } else {
    out << pad << scalar(j) << '\n';
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream out;
  render(out, report, 0);
  return out.str();
}

}  // namespace crc

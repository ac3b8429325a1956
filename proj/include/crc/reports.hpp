#pragma once

// JSON reports shared by the CLI and the census, and the text rendering of any report.

#include <string>
#include <vector>

#include "crc/classify.hpp"
#include "crc/code_spec.hpp"

namespace crc {

Json witness_json(const AmbientSpace& ambient, const CrWitness& w);

/// {n, q, size, cr, rho, delta, gamma, alpha, beta, u, spectrum, arithmetic, bounds, witness?}
Json cr_report(const Code& c, const CrAnalysis& analysis);
/// {spectrum, arithmetic, bounds}; requires a CR analysis.
Json spectrum_report(const CrAnalysis& analysis);

Json numbers_json(const IntersectionNumbers& numbers);
Json array_json(const IntersectionArray& a);
Json graph_json(const Graph& g);
Json drg_json(const DrgCertificate& cert);
Json checks_json(const std::vector<TheoremCheck>& checks);
/// {family, params, evidence:{array, isomorphism?}, theorem_checks}
Json family_json(const QuotientFamily& family, const std::vector<TheoremCheck>& checks);
Json product_json(const ProductCompatibility& p);
Json decomposition_json(const ProductDecomposition& d);
Json structure_json(const StructureReport& s);
Json hamming_quotient_json(const HammingQuotientReport& r);

/// Indented "key: value" lines; scalar arrays inline.
std::string render_text(const Json& report);

}  // namespace crc

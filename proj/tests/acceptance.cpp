// Runs the acceptance criteria; one PASS/FAIL line each, nonzero exit on any FAIL.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "crc/classify.hpp"
#include "crc/constructions.hpp"
#include "crc/cr_analysis.hpp"
#include "crc/isomorphism.hpp"
#include "crc/partitions.hpp"
#include "crc/search.hpp"
#include "oracles.hpp"

using namespace crc;
namespace fs = std::filesystem;

namespace {

// Wall-clock budgets, seconds.
constexpr double kBudgetSmall = 1.0;
constexpr double kBudgetProduct = 5.0;
constexpr double kBudgetLarge = 30.0;
constexpr double kBudgetCensus = 600.0;

struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

std::vector<std::uint64_t> plain(const Code& c) { return {c.members().begin(), c.members().end()}; }

oracle::Adjacency adjacency(const Graph& g) {
  oracle::Adjacency a(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) a[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
  return a;
}

bool is_complete(const Graph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) + 1 != g.vertex_count()) return false;
  return true;
}

/// Brute-force numbers agree with the certificate.
void expect_oracle_numbers(const Code& c, const CrCertificate& cert) {
  const auto o = oracle::brute_cr(c.length(), c.q(), plain(c));
  expect(o.cr == cert.completely_regular, "oracle disagrees on complete regularity");
  if (!o.cr) return;
  expect(o.gamma == cert.numbers->gamma && o.alpha == cert.numbers->alpha && o.beta == cert.numbers->beta,
         "oracle disagrees on intersection numbers");
}

void hamming_7_4() {
  const auto c = hamming_code(3, 2);
  const auto a = analyze(c);
  expect(a.certificate.completely_regular, "not CR");
  expect_oracle_numbers(c, a.certificate);
  expect(a.u->to_rows() == std::vector<std::vector<std::int64_t>>{{0, 7}, {1, 6}}, "U");
  expect(a.spectrum->eigenvalues == std::vector<std::int64_t>{7, -1}, "spectrum");
  expect(a.arithmetic->arithmetic && a.arithmetic->t == 4, "t");
  const auto g = coset_graph_by_syndrome(c).graph;
  expect(g.vertex_count() == 8 && is_complete(g), "coset graph is not K8");
  expect(classify_quotient(g).name() == "Hamming(1,8)", "family");
}

void repetition_6() {
  const auto c = repetition_code(6, 2);
  const auto cert = certify_completely_regular(c);
  expect(cert.completely_regular && cert.rho == 3, "rho");
  expect_oracle_numbers(c, cert);
  expect(predicted_quotient_array(*cert.numbers).to_string() == "{6,5,4;1,2,6}", "predicted array");
  const auto q = quotient_graph(coset_partition(c));
  const auto fixture = Graph::from_adjacency([] {
    std::vector<std::vector<Vertex>> adj;
    for (const auto& row : oracle::antipodal_folded_cube(6)) adj.emplace_back(row.begin(), row.end());
    return adj;
  }());
  const auto iso = graph_isomorphic(q, construct_fixture(FixtureKind::folded_cube, 6));
  expect(iso && is_isomorphism(q, construct_fixture(FixtureKind::folded_cube, 6), *iso), "fixture isomorphism");
  expect(graph_isomorphic(q, fixture).has_value(), "antipodal identification isomorphism");
  const auto s = arithmetic_structure_cases(c);
  bool case_a = false;
  for (const auto& k : s.cases) case_a = case_a || (k.label == 'a' && k.verified);
  expect(case_a, "structure case a");
}

void extended_hamming_8_4() {
  const auto c = extended_hamming_code(3);
  const auto a = analyze(c);
  expect(a.certificate.completely_regular, "not CR");
  expect_oracle_numbers(c, a.certificate);
  expect(a.u->to_rows() == std::vector<std::vector<std::int64_t>>{{0, 8, 0}, {1, 0, 7}, {0, 8, 0}}, "U");
  expect(a.spectrum->eigenvalues == std::vector<std::int64_t>{8, 0, -8}, "spectrum");
  expect(a.arithmetic->t == 4, "t");
  const auto g = coset_graph_by_syndrome(c).graph;
  oracle::Adjacency k88(16);
  for (unsigned i = 0; i < 8; ++i)
    for (unsigned j = 8; j < 16; ++j) {
      k88[i].push_back(j);
      k88[j].push_back(i);
    }
  std::vector<std::vector<Vertex>> adj(k88.begin(), k88.end());
  expect(graph_isomorphic(g, Graph::from_adjacency(adj)).has_value(), "coset graph is not K_{8,8}");
  const auto drg = certify_distance_regular(g);
  expect(drg.distance_regular && drg.array->to_string() == "{8,7;1,8}", "array");
  expect(classify_rho12(c).kind == Rho12Case::extended_hamming, "rho <= 2 branch");
}

void product_criterion() {
  const auto rep3 = repetition_code(3, 2);
  const auto pc = product_cr_criterion(rep3, rep3);
  expect(pc.compatible && pc.n1 == 1 && pc.n2 == 3, "rep3 x rep3 compatibility");
  const auto prod = cartesian_product(rep3, rep3);
  const auto o = oracle::brute_cr(6, 2, plain(prod));
  expect(o.cr && o.gamma == std::vector<unsigned>{0, 1, 2} && o.beta == std::vector<unsigned>{6, 3, 0},
         "brute-force product numbers");
  expect(pc.product_numbers->gamma == o.gamma && pc.product_numbers->beta == o.beta, "predicted numbers");
  expect(analyze(prod).spectrum->eigenvalues == std::vector<std::int64_t>{6, 2, -2}, "product spectrum");

  const auto h7 = hamming_code(3, 2);
  expect(!product_cr_criterion(h7, rep3).compatible, "ham x rep3 reported compatible");
  const auto bad = cartesian_product(h7, rep3);
  expect(!oracle::brute_cr(10, 2, plain(bad)).cr, "brute force finds ham x rep3 CR");
  const auto cert = certify_completely_regular(bad);
  expect(!cert.completely_regular && cert.witness, "no witness");
  const auto x = direct_neighbor_counts(bad, cert.witness->reference);
  const auto y = direct_neighbor_counts(bad, cert.witness->vertex);
  expect(x.distance_class == y.distance_class && (x.gamma != y.gamma || x.alpha != y.alpha || x.beta != y.beta),
         "witness does not replay");
}

void tridiagonal_closed_form() {
  std::mt19937_64 rng(20240601);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned rho = 1 + rng() % 6;
    const std::int64_t g = 1 + rng() % 6, b = 1 + rng() % 6;
    const std::int64_t k = rho * std::max(g, b) + static_cast<std::int64_t>(rng() % 8);
    std::vector<std::vector<std::int64_t>> m(rho + 1, std::vector<std::int64_t>(rho + 1, 0));
    for (unsigned i = 0; i <= rho; ++i) {
      m[i][i] = k - i * g - (rho - i) * b;
      if (i > 0) m[i][i - 1] = i * g;
      if (i < rho) m[i][i + 1] = (rho - i) * b;
    }
    std::vector<std::int64_t> closed;
    for (unsigned i = 0; i <= rho; ++i) closed.push_back(k - (g + b) * i);
    expect(oracle::integer_eigenvalues(m, k) == closed, "closed form differs from the characteristic roots");
    expect(tridiagonal_formula_spectrum(k, g, b, rho).eigenvalues == closed, "library closed form");
  }
}

void hamming_squared() {
  const auto h7 = hamming_code(3, 2);
  const auto c = cartesian_product(h7, h7);
  expect(classify_quotient(coset_graph_by_syndrome(c).graph).name() == "Hamming(2,8)", "quotient family");
  const auto d = decompose_product(c);
  expect(d.factors.size() == 2, "factor count");
  for (const auto& f : d.factors) {
    const auto eq = codes_equivalent(f, h7);
    expect(f.length() == 7 && eq && *eq, "factor is not a Hamming [7,4] code");
  }
  std::vector<std::uint64_t> rebuilt;
  const auto& a = c.ambient();
  for (Word x : d.factors[0].members())
    for (Word y : d.factors[1].members()) {
      std::vector<Symbol> w(14, 0);
      for (std::size_t i = 0; i < 7; ++i) {
        w[d.blocks[0][i]] = d.factors[0].ambient().digit(x, static_cast<unsigned>(i));
        w[d.blocks[1][i]] = d.factors[1].ambient().digit(y, static_cast<unsigned>(i));
      }
      rebuilt.push_back(a.encode(w));
    }
  std::sort(rebuilt.begin(), rebuilt.end());
  expect(rebuilt == plain(c), "product of factors differs from C");
}

void doubled_columns() {
  const auto h = hamming_parity_check(3, Alphabet::construct(2));
  const auto c = Code::from_parity_check(replicate_columns(h, 2));
  const auto cols = column_classes(c);
  expect(cols.classes.size() == 7, "class count");
  for (const auto& k : cols.classes) expect(k.size() == 2, "class size");
  expect(cols.gamma1 && *cols.gamma1 == 2 && cols.matches_gamma1, "gamma_1");
  const auto s = arithmetic_structure_cases(c);
  bool case_b = false;
  for (const auto& k : s.cases) case_b = case_b || (k.label == 'b' && k.verified);
  expect(case_b, "structure case b");
  const auto g = quotient_graph(coset_partition(c));
  expect(g.vertex_count() == 8 && is_complete(g), "quotient is not K8");
}

void h24_partition() {
  const AmbientSpace a(2, Alphabet::construct(4));
  std::vector<std::vector<Word>> classes(4);
  for (Word x = 0; x < 16; ++x) classes[(a.digit(x, 0) / 2) * 2 + a.digit(x, 1) / 2].push_back(x);
  const auto p = VertexPartition::from_classes(a, classes);
  const auto cert = certify_cr_partition(p);
  expect(cert.completely_regular, "not a CR partition");
  expect(cert.numbers->gamma[1] == 2 && cert.numbers->beta[0] == 4, "numbers");
  const auto q = quotient_graph(p);
  expect(oracle::brute_isomorphic(adjacency(q), {{1, 2}, {0, 3}, {0, 3}, {1, 2}}), "quotient is not H(2,2)");
  const auto fam = classify_quotient(q);
  expect(fam.name() == "Hamming(2,2)", "family");
  for (const auto& c : check_clique_restrictions(fam, q, 4, min_class_distance(p), false))
    expect(c.status == CheckStatus::inapplicable, c.name + " was applied");
}

void shrikhande_separation() {
  const auto& s = construct_fixture(FixtureKind::shrikhande);
  const auto& h = construct_fixture(FixtureKind::hamming, 2, 4);
  const auto as = oracle::brute_array(adjacency(s)), ah = oracle::brute_array(adjacency(h));
  expect(as && ah && *as == *ah, "oracle arrays differ");
  const auto fs_ = classify_quotient(s), fh = classify_quotient(h);
  expect(fs_.array.to_string() == "{6,3;1,2}" && fh.array.to_string() == "{6,3;1,2}", "arrays");
  expect(fs_.name() == "Doob(1,0)" && fh.name() == "Hamming(2,4)", "families");
  expect(max_clique(s) == 3 && max_clique(h) == 4, "clique numbers");
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void binary_census() {
  const auto root = fs::temp_directory_path() / "crc_acceptance_census";
  fs::remove_all(root);
  CensusParams params;
  params.max_length = 7;
  params.out_dir = (root / "a").string();
  const auto first = run_census(params);
  params.out_dir = (root / "b").string();
  const auto second = run_census(params);
  expect(first.fail == 0 && !first.failing_record, "a theorem check failed");
  expect(first.enumerated == first.cr_records + first.non_cr_records, "records do not reconcile");
  for (const char* f : {"census.jsonl", "summary.csv", "summary.json"})
    expect(slurp(root / "a" / f) == slurp(root / "b" / f), std::string(f) + " differs between runs");
  const auto summary = Json::parse(slurp(root / "a" / "summary.json"));
  expect(summary.contains("question_scan"), "no question scan summary");
  std::cout << "  census: " << summary.dump() << "\n";
  bool hamming = false, folded = false;
  std::ifstream in(root / "a" / "census.jsonl");
  std::string line;
  while (std::getline(in, line)) {
    const auto rec = Json::parse(line);
    if (!rec["cr"].get<bool>()) continue;
    if (rec["n"] == 7 && rec["size"] == 16 && rec["delta"] == 3 && rec["family"] == "Hamming(1,8)") hamming = true;
    if (rec["n"] == 6 && rec["size"] == 2 && rec["family"] == "FoldedCube(6)") folded = true;
  }
  expect(hamming, "Hamming [7,4] missing from the census");
  expect(folded, "repetition-6 missing from the census");
  fs::remove_all(root);
}

struct Criterion {
  const char* name;
  double budget;
  std::function<void()> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"hamming_7_4", kBudgetSmall, hamming_7_4},
      {"repetition_6_folded_cube", kBudgetSmall, repetition_6},
      {"extended_hamming_8_4", kBudgetSmall, extended_hamming_8_4},
      {"product_criterion_both_directions", kBudgetProduct, product_criterion},
      {"tridiagonal_closed_form", kBudgetSmall, tridiagonal_closed_form},
      {"hamming_squared_decomposition", kBudgetLarge, hamming_squared},
      {"doubled_columns_case_b", kBudgetLarge, doubled_columns},
      {"h24_partition_quotient", kBudgetSmall, h24_partition},
      {"shrikhande_vs_rook", kBudgetSmall, shrikhande_separation},
      {"binary_census_n7", kBudgetCensus, binary_census},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    try {
      c.body();
    } catch (const Failure& f) {
      ok = false;
      detail = f.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && secs > c.budget) {
      ok = false;
      detail = "over budget";
    }
    failures += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << c.name << " (" << secs << " s, budget "
              << c.budget << " s)" << (detail.empty() ? "" : ": " + detail) << std::endl;
  }
  return failures == 0 ? 0 : 1;
}

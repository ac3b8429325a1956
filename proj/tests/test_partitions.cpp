#include <doctest.h>

#include <random>

#include "crc/constructions.hpp"
#include "crc/cr_analysis.hpp"
#include "crc/error.hpp"
#include "crc/isomorphism.hpp"
#include "crc/partitions.hpp"
#include "oracles.hpp"

using namespace crc;

namespace {

oracle::Adjacency adjacency(const Graph& g) {
  oracle::Adjacency a(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) a[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
  return a;
}

Graph from_oracle(const oracle::Adjacency& a) {
  std::vector<std::vector<Vertex>> adj(a.size());
  for (std::size_t v = 0; v < a.size(); ++v) adj[v].assign(a[v].begin(), a[v].end());
  return Graph::from_adjacency(adj);
}

oracle::Adjacency complete(unsigned v) {
  oracle::Adjacency a(v);
  for (unsigned i = 0; i < v; ++i)
    for (unsigned j = 0; j < v; ++j)
      if (i != j) a[i].push_back(j);
  return a;
}

Code h24_class() {
  const AmbientSpace a(2, Alphabet::construct(4));
  std::vector<Word> words;
  for (Symbol x : {0u, 1u})
    for (Symbol y : {0u, 1u}) words.push_back(a.encode(std::vector<Symbol>{x, y}));
  return Code::from_words(a, words, true);
}

VertexPartition h24_partition() {
  const AmbientSpace a(2, Alphabet::construct(4));
  std::vector<std::vector<Word>> classes(4);
  for (Word x = 0; x < 16; ++x) classes[(a.digit(x, 0) / 2) * 2 + a.digit(x, 1) / 2].push_back(x);
  return VertexPartition::from_classes(a, classes);
}

Code random_linear(unsigned n, unsigned q, std::mt19937_64& rng) {
  const auto f = Alphabet::construct(q);
  const std::size_t rows = 1 + rng() % (n - 1);
  GFMatrix h(f, rows, n);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < n; ++c) h(r, c) = rng() % q;
  return Code::from_parity_check(h);
}

/// End-to-end consistency of one coset partition.
void check_coset_pipeline(const Code& c) {
  const auto cosets = coset_partition(c);
  const auto quotient = quotient_graph(cosets);
  if (c.is_linear()) {
    const auto cg = coset_graph_by_syndrome(c);
    CHECK(is_isomorphism(quotient, cg.graph, coset_to_syndrome(cg, cosets)));
  }
  const auto full = certify_cr_partition(cosets);
  CHECK(certify_cr_partition(cosets, true).completely_regular == full.completely_regular);
  if (!full.completely_regular || c.is_trivial()) return;
  const auto& numbers = *full.numbers;
  const auto drg = certify_distance_regular(quotient);
  REQUIRE(drg.distance_regular);
  const auto expect = oracle::brute_array(adjacency(quotient));
  REQUIRE(expect);
  CHECK(drg.array->b == expect->first);
  CHECK(drg.array->c == expect->second);
  const auto predicted = predicted_quotient_array(numbers);
  CHECK(predicted == *drg.array);
  const auto a = analyze(c);
  const auto graph_spec = drg_spectrum(*drg.array);
  REQUIRE(graph_spec.size() == a.spectrum->eigenvalues.size());
  const std::int64_t a0 = numbers.alpha[0], g1 = numbers.gamma[1];
  for (std::size_t i = 0; i < graph_spec.size(); ++i) CHECK((a.spectrum->eigenvalues[i] - a0) == g1 * graph_spec[i]);
  CHECK(*a.bounds->smallest_eigenvalue_slack >= 0);
}

}  // namespace

TEST_CASE("coset partitions") {
  CHECK(coset_partition(repetition_code(3, 2)).class_count() == 4);
  const auto h7 = hamming_code(3, 2);
  const auto cosets = coset_partition(h7);
  CHECK(cosets.class_count() == 8);
  CHECK(cosets.is_coset_partition());
  const auto& a = h7.ambient();
  const auto e0 = a.unit(0);
  const auto& h = h7.linear().parity_check;
  for (Word x = 0; x < 128; ++x) {
    const auto s = multiply(h, a.decode(x));
    CHECK((cosets.class_of(x) == cosets.class_of(e0)) == (s == h.column(0)));
  }
  CHECK(h24_partition().class_map() == coset_partition(h24_class()).class_map());
  const AmbientSpace z(2, Alphabet::construct(2));
  CHECK_THROWS_AS(coset_partition(Code::from_words(z, {0, 1, 2})), InputError);
}

TEST_CASE("partition certification") {
  const auto ham = certify_cr_partition(coset_partition(hamming_code(3, 2)));
  REQUIRE(ham.completely_regular);
  CHECK(ham.numbers->gamma == std::vector<unsigned>{0, 1});
  CHECK(ham.numbers->beta == std::vector<unsigned>{7, 0});
  CHECK_FALSE(ham.used_translation_shortcut);

  const auto eh = certify_cr_partition(h24_partition());
  REQUIRE(eh.completely_regular);
  CHECK(eh.numbers->gamma[1] == 2);
  CHECK(eh.numbers->beta[0] == 4);
  CHECK(eh.numbers->alpha[0] == 2);
  CHECK(predicted_quotient_array(*eh.numbers).to_string() == "{2,1;1,2}");

  const AmbientSpace a(2, Alphabet::construct(2));
  const auto split = certify_cr_partition(VertexPartition::from_classes(a, {{0}, {1, 2, 3}}));
  CHECK_FALSE(split.completely_regular);
  // {01,10,11} is not CR on its own: 11 has no neighbour outside it, 01 has one.
  REQUIRE(split.failing_class.has_value());
  CHECK(*split.failing_class == 1);
  CHECK_FALSE(oracle::brute_cr(2, 2, {1, 2, 3}).cr);
  CHECK(oracle::brute_cr(2, 2, {0}).cr);
  CHECK_THROWS_AS(VertexPartition::from_classes(a, {{0}, {1, 2}}), InputError);
  CHECK_THROWS_AS(VertexPartition::from_classes(a, {{0, 1}, {1, 2, 3}}), InputError);
}

TEST_CASE("quotient graphs") {
  const auto eh = quotient_graph(h24_partition());
  CHECK(oracle::brute_isomorphic(adjacency(eh), {{1, 2}, {0, 3}, {0, 3}, {1, 2}}));

  const auto k8 = quotient_graph(coset_partition(hamming_code(3, 2)));
  CHECK(adjacency(k8) == complete(8));

  const auto folded = quotient_graph(coset_partition(repetition_code(6, 2)));
  const auto fixture = from_oracle(oracle::antipodal_folded_cube(6));
  CHECK(folded.vertex_count() == 32);
  const auto iso = graph_isomorphic(folded, fixture);
  REQUIRE(iso);
  for (auto [u, v] : folded.edges()) CHECK(fixture.adjacent((*iso)[u], (*iso)[v]));
}

TEST_CASE("syndrome coset graphs") {
  const auto h7 = hamming_code(3, 2);
  const auto k8 = coset_graph_by_syndrome(h7);
  CHECK(k8.redundancy == 3);
  CHECK(adjacency(k8.graph) == complete(8));

  const auto ext = coset_graph_by_syndrome(extended_hamming_code(3));
  REQUIRE(ext.graph.vertex_count() == 16);
  const auto cert = certify_distance_regular(ext.graph);
  REQUIRE(cert.distance_regular);
  CHECK(cert.array->to_string() == "{8,7;1,8}");
  CHECK(max_clique(ext.graph) == 2);

  const auto doubled = Code::from_parity_check(replicate_columns(h7.linear().parity_check, 2));
  CHECK(adjacency(coset_graph_by_syndrome(doubled).graph) == complete(8));
}

TEST_CASE("distance-regularity certificates") {
  const auto k8 = certify_distance_regular(from_oracle(complete(8)));
  CHECK(k8.array->to_string() == "{7;1}");
  const auto f6 = certify_distance_regular(from_oracle(oracle::antipodal_folded_cube(6)));
  CHECK(f6.array->to_string() == "{6,5,4;1,2,6}");

  const std::vector<Edge> path{{0, 1}, {1, 2}};
  const auto p3 = certify_distance_regular(Graph::from_edges(3, path));
  CHECK_FALSE(p3.distance_regular);
  REQUIRE(p3.witness);
  const std::vector<Edge> two{{0, 1}, {2, 3}};
  CHECK_THROWS_AS(certify_distance_regular(Graph::from_edges(4, two)), InputError);

  std::mt19937_64 rng(0x5eed31);
  for (int trial = 0; trial < 80; ++trial) {
    const unsigned n = 3 + rng() % 8;
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) edges.push_back({u, v});
    const auto g = Graph::from_edges(n, edges);
    if (!is_connected(g)) continue;
    const auto expect = oracle::brute_array(adjacency(g));
    const auto cert = certify_distance_regular(g);
    REQUIRE(cert.distance_regular == expect.has_value());
    if (expect) CHECK(cert.array->b == expect->first);
  }
}

TEST_CASE("predicted arrays and spectra") {
  const auto rep6 = certify_completely_regular(repetition_code(6, 2));
  CHECK(predicted_quotient_array(*rep6.numbers).to_string() == "{6,5,4;1,2,6}");
  const auto ext = certify_completely_regular(extended_hamming_code(3));
  CHECK(predicted_quotient_array(*ext.numbers).to_string() == "{8,7;1,8}");
  CHECK(drg_spectrum({{7}, {1}}) == std::vector<std::int64_t>{7, -1});
  CHECK(drg_spectrum({{6, 5, 4}, {1, 2, 6}}) == std::vector<std::int64_t>{6, 2, -2, -6});
  CHECK(drg_spectrum({{8, 7}, {1, 8}}) == std::vector<std::int64_t>{8, 0, -8});
}

TEST_CASE("coset pipeline consistency on random linear codes") {
  std::mt19937_64 rng(0x5eed32);
  for (auto [n, q] : std::vector<std::pair<unsigned, unsigned>>{{4, 2}, {5, 2}, {6, 2}, {7, 2}, {4, 3}, {5, 3}, {3, 4}})
    for (int trial = 0; trial < 8; ++trial) check_coset_pipeline(random_linear(n, q, rng));
  check_coset_pipeline(hamming_code(3, 2));
  check_coset_pipeline(repetition_code(6, 2));
  check_coset_pipeline(extended_hamming_code(3));
  check_coset_pipeline(hamming_code(2, 3));
  check_coset_pipeline(h24_class());
}

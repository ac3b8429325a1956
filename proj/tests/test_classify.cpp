#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "crc/classify.hpp"
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

Graph relabeled(const Graph& g, std::mt19937_64& rng) {
  std::vector<Vertex> perm(g.vertex_count());
  for (Vertex v = 0; v < perm.size(); ++v) perm[v] = v;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.push_back({perm[u], perm[v]});
  return Graph::from_edges(g.vertex_count(), edges);
}

Graph random_graph(unsigned n, unsigned one_in, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng() % one_in == 0) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

std::string family_of(const Graph& g) { return classify_quotient(g).name(); }

const GFMatrix& ham_check() {
  static const GFMatrix h = hamming_parity_check(3, Alphabet::construct(2));
  return h;
}

Code doubled_hamming() { return Code::from_parity_check(replicate_columns(ham_check(), 2)); }

}  // namespace

TEST_CASE("fixtures") {
  CHECK(oracle::brute_isomorphic(adjacency(folded_cube(4)), adjacency(complete_bipartite_graph(4))));
  CHECK(adjacency(folded_cube(6)).size() == 32);

  const auto& shrikhande = construct_fixture(FixtureKind::shrikhande);
  const auto& rook = construct_fixture(FixtureKind::hamming, 2, 4);
  for (const Graph* g : {&shrikhande, &rook}) {
    const auto arr = oracle::brute_array(adjacency(*g));
    REQUIRE(arr);
    CHECK(arr->first == std::vector<unsigned>{6, 3});
    CHECK(arr->second == std::vector<unsigned>{1, 2});
  }
  for (Vertex v = 0; v < 16; ++v) {
    CHECK(is_cycle(local_graph(shrikhande, v)));
    const auto parts = connected_components(local_graph(rook, v));
    CHECK(parts.size() == 2);
    for (const auto& p : parts) CHECK(p.size() == 3);
  }
  CHECK(&construct_fixture(FixtureKind::folded_cube, 6) == &construct_fixture(FixtureKind::folded_cube, 6));
  CHECK(doob_graph(1, 1).vertex_count() == 64);
}

TEST_CASE("fixtures classify as themselves") {
  CHECK(family_of(construct_fixture(FixtureKind::hamming, 2, 4)) == "Hamming(2,4)");
  CHECK(family_of(construct_fixture(FixtureKind::hamming, 3, 3)) == "Hamming(3,3)");
  CHECK(family_of(construct_fixture(FixtureKind::hamming, 2, 8)) == "Hamming(2,8)");
  CHECK(family_of(construct_fixture(FixtureKind::hamming, 4, 2)) == "Hamming(4,2)");
  CHECK(family_of(construct_fixture(FixtureKind::shrikhande)) == "Doob(1,0)");
  CHECK(family_of(construct_fixture(FixtureKind::doob, 1, 1)) == "Doob(1,1)");
  CHECK(family_of(construct_fixture(FixtureKind::doob, 2, 0)) == "Doob(2,0)");
  for (unsigned n : {5u, 6u, 7u, 8u})
    CHECK(family_of(construct_fixture(FixtureKind::folded_cube, n)) == "FoldedCube(" + std::to_string(n) + ")");
  CHECK(family_of(construct_fixture(FixtureKind::complete, 5)) == "Hamming(1,5)");
  CHECK(family_of(construct_fixture(FixtureKind::complete_bipartite, 5)) == "CompleteBipartite(5)");
  CHECK(family_of(folded_cube(4)) == "FoldedCube(4)");
  const std::vector<Edge> path{{0, 1}, {1, 2}};
  CHECK_THROWS_AS(classify_quotient(Graph::from_edges(3, path)), InputError);
}

TEST_CASE("isomorphism") {
  const std::vector<Edge> square{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  CHECK(graph_isomorphic(Graph::from_edges(4, square), hamming_graph(2, 2)));
  CHECK(graph_isomorphic(folded_cube(3), complete_graph(4)));
  CHECK_FALSE(graph_isomorphic(shrikhande_graph(), hamming_graph(2, 4)));
  std::mt19937_64 rng(0x5eed41);
  const auto f6 = folded_cube(6);
  const auto moved = relabeled(f6, rng);
  const auto iso = graph_isomorphic(f6, moved);
  REQUIRE(iso);
  CHECK(is_isomorphism(f6, moved, *iso));

  for (int trial = 0; trial < 150; ++trial) {
    const unsigned n = 2 + rng() % 6;
    const auto a = random_graph(n, 2, rng), b = random_graph(n, 2, rng);
    const auto found = graph_isomorphic(a, b);
    CHECK(found.has_value() == oracle::brute_isomorphic(adjacency(a), adjacency(b)));
    if (found) CHECK(is_isomorphism(a, b, *found));
    const auto self = relabeled(a, rng);
    CHECK(graph_isomorphic(a, self).has_value());
  }

  // Colours must be respected.
  const std::vector<Edge> path{{0, 1}, {1, 2}};
  const auto p3 = Graph::from_edges(3, path);
  const std::vector<std::uint32_t> c1{1, 0, 0}, c2{0, 0, 1}, c3{0, 1, 0};
  CHECK(graph_isomorphic(p3, p3, c1, c2));
  CHECK_FALSE(graph_isomorphic(p3, p3, c1, c3));
}

TEST_CASE("clique numbers") {
  CHECK(max_clique(complete_graph(8)) == 8);
  CHECK(max_clique(folded_cube(6)) == 2);
  CHECK(max_clique(shrikhande_graph()) == 3);
  CHECK(max_clique(hamming_graph(2, 4)) == 4);
  std::mt19937_64 rng(0x5eed42);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = random_graph(4 + rng() % 13, 1 + rng() % 3, rng);
    CHECK(max_clique(g) == oracle::brute_clique_number(adjacency(g)));
  }
}

TEST_CASE("clique-based checks") {
  auto statuses = [](const std::vector<TheoremCheck>& checks) {
    std::map<std::string, CheckStatus> out;
    for (const auto& c : checks) out[c.name] = c.status;
    return out;
  };
  const auto ham = hamming_code(3, 2);
  const auto cosets = coset_partition(ham);
  const auto q = quotient_graph(cosets);
  const auto fam = classify_quotient(q);
  CHECK(fam.name() == "Hamming(1,8)");
  auto s = statuses(check_clique_restrictions(fam, q, 2, min_class_distance(cosets), true));
  CHECK(s["quotient_clique_bound"] == CheckStatus::pass);
  CHECK(s["hamming_quotient_alphabet"] == CheckStatus::pass);

  const AmbientSpace a(2, Alphabet::construct(4));
  std::vector<Word> p1;
  for (Symbol x : {0u, 1u})
    for (Symbol y : {0u, 1u}) p1.push_back(a.encode(std::vector<Symbol>{x, y}));
  const auto eh = coset_partition(Code::from_words(a, p1, true));
  CHECK(*min_class_distance(eh) == 1);
  const auto eq = quotient_graph(eh);
  for (const auto& c : check_clique_restrictions(classify_quotient(eq), eq, 4, min_class_distance(eh), true))
    CHECK(c.status == CheckStatus::inapplicable);

  const auto rep = coset_partition(repetition_code(6, 2));
  const auto rq = quotient_graph(rep);
  const auto rf = classify_quotient(rq);
  CHECK(rf.name() == "FoldedCube(6)");
  s = statuses(check_clique_restrictions(rf, rq, 2, min_class_distance(rep), true));
  CHECK(s["no_folded_array_nonbinary"] == CheckStatus::inapplicable);
  CHECK(s["additive_654_is_folded_6cube"] == CheckStatus::pass);
  for (const auto& [name, st] : s) CHECK(st != CheckStatus::fail);
}

TEST_CASE("coordinate classes") {
  const auto hh = coordinate_classes(doubled_hamming(), 7);
  REQUIRE(hh.classes.size() == 7);
  for (unsigned i = 0; i < 7; ++i) CHECK(hh.classes[i] == std::vector<unsigned>{i, i + 7});
  CHECK(*hh.matches_blocks);
  const auto h7 = hamming_code(3, 2);
  CHECK(coordinate_classes(h7).classes.size() == 7);
  CHECK(coordinate_classes(cartesian_product(h7, h7)).classes.size() == 14);
}

TEST_CASE("product decompositions") {
  const auto h7 = hamming_code(3, 2);
  const auto c = cartesian_product(h7, h7);
  const auto d = decompose_product(c);
  CHECK(d.quotient.name() == "Hamming(2,8)");
  REQUIRE(d.factors.size() == 2);
  CHECK(d.blocks[0] == std::vector<unsigned>{0, 1, 2, 3, 4, 5, 6});
  CHECK(d.blocks[1] == std::vector<unsigned>{7, 8, 9, 10, 11, 12, 13});
  for (const auto& f : d.factors) CHECK(f.members() == h7.members());
  CHECK(cartesian_product(d.factors[0], d.factors[1]).members() == c.members());

  const auto hh = doubled_hamming();
  const auto single = decompose_product(hh);
  REQUIRE(single.factors.size() == 1);
  CHECK(single.factors[0].members() == hh.members());

  const auto rep2 = repetition_code(2, 2);
  const auto r = decompose_product(cartesian_product(rep2, rep2));
  CHECK(r.quotient.name() == "Hamming(2,2)");
  REQUIRE(r.factors.size() == 2);
  for (const auto& f : r.factors) CHECK(f.members() == rep2.members());

  CHECK_THROWS_AS(decompose_product(repetition_code(6, 2)), InputError);
}

TEST_CASE("parallel column classes") {
  const auto hh = column_classes(doubled_hamming());
  CHECK(hh.classes.size() == 7);
  for (const auto& cls : hh.classes) CHECK(cls.size() == 2);
  CHECK(hh.uniform);
  CHECK(*hh.gamma1 == 2);
  CHECK(hh.matches_gamma1);
  const auto h7 = hamming_code(3, 2);
  CHECK(hh.shortened->members() == h7.members());

  const auto single = column_classes(h7);
  CHECK(single.classes.size() == 7);
  CHECK(*single.gamma1 == 1);
  CHECK(single.shortened->members() == h7.members());

  const auto m = repetition_parity_check(4, Alphabet::construct(2));
  const auto triple = column_classes(Code::from_parity_check(replicate_columns(m, 3)));
  CHECK(triple.classes.size() == 4);
  for (const auto& cls : triple.classes) CHECK(cls.size() == 3);
  CHECK(*triple.gamma1 == 3);
  CHECK(triple.matches_gamma1);
}

TEST_CASE("recognizers and equivalence") {
  CHECK(is_hamming_check(ham_check()));
  CHECK(is_hamming_check(hamming_parity_check(2, Alphabet::construct(3))));
  CHECK_FALSE(is_hamming_check(replicate_columns(ham_check(), 2)));
  CHECK(is_extended_hamming_check(extended_hamming_parity_check(3)));
  CHECK_FALSE(is_extended_hamming_check(ham_check()));

  const auto h7 = hamming_code(3, 2);
  std::vector<std::size_t> order{6, 2, 4, 0, 1, 5, 3};
  const auto permuted = Code::from_parity_check(ham_check().select_columns(order));
  CHECK(permuted.members() != h7.members());
  CHECK(*codes_equivalent(h7, permuted));
  std::vector<std::size_t> repeated{0, 1, 2, 3, 4, 5, 5};
  const auto weaker = Code::from_parity_check(ham_check().select_columns(repeated));
  CHECK(weaker.size() == 16);
  CHECK_FALSE(*codes_equivalent(h7, weaker));
}

TEST_CASE("covering radius one and two") {
  CHECK(classify_rho12(hamming_code(3, 2)).kind == Rho12Case::hamming);
  CHECK(classify_rho12(extended_hamming_code(3)).kind == Rho12Case::extended_hamming);
  const auto rep3 = repetition_code(3, 2);
  CHECK(classify_rho12(cartesian_product(rep3, rep3)).kind == Rho12Case::product_of_hamming);
  CHECK(classify_rho12(hamming_code(2, 3)).kind == Rho12Case::hamming);
}

TEST_CASE("structure cases") {
  auto labels = [](const StructureReport& r) {
    std::string out;
    for (const auto& c : r.cases) {
      CHECK(c.verified);
      out += c.label;
    }
    return out;
  };
  const auto m = repetition_parity_check(4, Alphabet::construct(2));
  const auto mm = arithmetic_structure_cases(Code::from_parity_check(replicate_columns(m, 2)));
  CHECK(labels(mm).find('a') != std::string::npos);
  CHECK(*mm.columns.gamma1 == 2);
  CHECK(mm.quotient.name() == "FoldedCube(4)");

  CHECK(labels(arithmetic_structure_cases(doubled_hamming())).find('b') != std::string::npos);
  const auto h7 = hamming_code(3, 2);
  CHECK(labels(arithmetic_structure_cases(cartesian_product(h7, h7))).find('d') != std::string::npos);
  CHECK(labels(arithmetic_structure_cases(repetition_code(5, 2))).find('a') != std::string::npos);
}

TEST_CASE("Hamming coset graph corollary") {
  const auto h7 = hamming_code(3, 2);
  const auto one = hamming_coset_graph_cases(h7);
  CHECK(one.quotient.name() == "Hamming(1,8)");
  CHECK(one.t == 4);
  CHECK(one.cases == std::vector<char>{'a'});
  const auto two = hamming_coset_graph_cases(cartesian_product(h7, h7));
  CHECK(two.quotient.name() == "Hamming(2,8)");
  CHECK(two.t == 4);
  CHECK(std::find(two.cases.begin(), two.cases.end(), 'c') != two.cases.end());
  const auto dbl = hamming_coset_graph_cases(doubled_hamming());
  CHECK(dbl.t == 8);
  CHECK(std::find(dbl.cases.begin(), dbl.cases.end(), 'a') != dbl.cases.end());
}

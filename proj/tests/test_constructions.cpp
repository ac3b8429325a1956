#include <doctest.h>

#include <set>

#include "crc/constructions.hpp"
#include "crc/cr_analysis.hpp"
#include "crc/error.hpp"
#include "oracles.hpp"

using namespace crc;

namespace {

std::vector<std::uint64_t> plain(const Code& c) { return {c.members().begin(), c.members().end()}; }

/// Every vertex is within distance 1 of exactly one codeword.
bool perfect_one_covering(const Code& c) {
  const auto& a = c.ambient();
  for (Word x = 0; x < a.vertex_count(); ++x) {
    unsigned hits = 0;
    for (Word m : c.members()) hits += a.distance(x, m) <= 1;
    if (hits != 1) return false;
  }
  return true;
}

void check_product_prediction(const Code& left, const Code& right) {
  const auto pc = product_cr_criterion(left, right);
  REQUIRE(pc.compatible);
  const auto prod = cartesian_product(left, right);
  const auto brute = oracle::brute_cr(prod.length(), prod.q(), plain(prod));
  REQUIRE(brute.cr);
  CHECK(brute.rho == pc.product_rho);
  CHECK(brute.gamma == pc.product_numbers->gamma);
  CHECK(brute.beta == pc.product_numbers->beta);
  for (unsigned i = 0; i <= pc.product_rho; ++i) {
    CHECK(brute.gamma[i] == pc.n1 * i);
    CHECK(brute.beta[i] == pc.n2 * (pc.product_rho - i));
  }
}

}  // namespace

TEST_CASE("Hamming codes") {
  CHECK(hamming_code(2, 2).members() == std::vector<Word>{0, 7});
  const auto h7 = hamming_code(3, 2);
  CHECK(h7.size() == 16);
  CHECK(minimum_distance(h7) == 3);
  CHECK(covering_radius(h7) == 1);
  CHECK(perfect_one_covering(h7));
  const auto t4 = hamming_code(2, 3);
  CHECK(t4.length() == 4);
  CHECK(t4.size() == 9);
  CHECK(perfect_one_covering(t4));
  CHECK(perfect_one_covering(hamming_code(2, 4)));
  CHECK_THROWS_AS(hamming_code(1, 2), InputError);

  // Columns are normalized points in lexicographic order, row 0 most significant.
  const auto h = hamming_parity_check(2, Alphabet::construct(3));
  CHECK(h.to_rows() == std::vector<std::vector<Symbol>>{{0, 1, 1, 1}, {1, 0, 1, 2}});
}

TEST_CASE("extended Hamming codes") {
  const auto e4 = extended_hamming_code(2);
  CHECK(e4.members() == std::vector<Word>{0, 15});
  const auto e8 = extended_hamming_code(3);
  CHECK(e8.size() == 16);
  CHECK(minimum_distance(e8) == 4);
  CHECK(covering_radius(e8) == 2);
  const auto a = analyze(e8);
  CHECK(a.arithmetic->t == 4);
}

TEST_CASE("column replication") {
  const auto f2 = Alphabet::construct(2);
  const auto h = hamming_parity_check(3, f2);
  CHECK(replicate_columns(h, 1) == h);
  const auto h2 = replicate_columns(h, 2);
  CHECK(h2.rows() == 3);
  CHECK(h2.cols() == 14);
  const auto c = Code::from_parity_check(h2);
  const auto cert = certify_completely_regular(c);
  REQUIRE(cert.completely_regular);
  CHECK(cert.rho == 1);
  CHECK(cert.numbers->gamma[1] == 2);

  // Direct enumeration: the block sums of x must have zero syndrome.
  const auto m = repetition_parity_check(3, f2);
  const auto r3 = replicate_columns(m, 3);
  const auto code = Code::from_parity_check(r3);
  std::set<Word> expect;
  for (Word x = 0; x < (1u << 9); ++x) {
    bool zero = true;
    for (std::size_t row = 0; row < m.rows(); ++row) {
      unsigned s = 0;
      for (unsigned j = 0; j < 9; ++j) s ^= m(row, j % 3) & (x >> j & 1u);
      zero = zero && s == 0;
    }
    if (zero) expect.insert(x);
  }
  CHECK(std::set<Word>(code.members().begin(), code.members().end()) == expect);
}

TEST_CASE("products and padding") {
  const auto rep3 = repetition_code(3, 2);
  const auto pp = cartesian_product(rep3, rep3);
  CHECK(pp.length() == 6);
  CHECK(pp.members() == std::vector<Word>{0, 7, 56, 63});
  CHECK(pp.is_linear());
  const auto h7 = hamming_code(3, 2);
  CHECK(cartesian_product(h7, h7).size() == 256);
  const auto padded = pad(h7);
  CHECK(padded.length() == 8);
  CHECK(padded.size() == 32);
  CHECK_FALSE(is_reduced(padded));

  const auto rep2 = repetition_code(2, 2);
  const auto left = cartesian_product(cartesian_product(rep2, rep3), h7);
  const auto right = cartesian_product(rep2, cartesian_product(rep3, h7));
  CHECK(left.members() == right.members());

  const AmbientSpace a3(3, Alphabet::construct(3));
  CHECK_THROWS_AS(cartesian_product(rep3, Code::from_words(a3, {0})), InputError);
}

TEST_CASE("product criterion") {
  const auto rep3 = repetition_code(3, 2);
  const auto pc = product_cr_criterion(rep3, rep3);
  CHECK(pc.compatible);
  CHECK(pc.n1 == 1);
  CHECK(pc.n2 == 3);
  CHECK(pc.product_rho == 2);
  CHECK(pc.product_numbers->gamma == std::vector<unsigned>{0, 1, 2});
  CHECK(pc.product_numbers->beta == std::vector<unsigned>{6, 3, 0});
  check_product_prediction(rep3, rep3);
  CHECK(analyze(cartesian_product(rep3, rep3)).spectrum->eigenvalues == std::vector<std::int64_t>{6, 2, -2});

  const auto h7 = hamming_code(3, 2);
  const auto bad = product_cr_criterion(h7, rep3);
  CHECK_FALSE(bad.compatible);
  CHECK(bad.failing_condition == "b");
  const auto prod = cartesian_product(h7, rep3);
  CHECK_FALSE(oracle::brute_cr(10, 2, plain(prod)).cr);
  CHECK_FALSE(certify_completely_regular(prod).completely_regular);

  const auto hh = product_cr_criterion(h7, h7);
  CHECK(hh.compatible);
  CHECK(hh.n1 == 1);
  CHECK(hh.n2 == 7);
  CHECK(hh.product_rho == 2);
  check_product_prediction(h7, h7);

  check_product_prediction(hamming_code(2, 3), hamming_code(2, 3));
  check_product_prediction(rep3, cartesian_product(rep3, rep3));

  const AmbientSpace a3(3, Alphabet::construct(2));
  CHECK_THROWS_AS(product_cr_criterion(Code::from_words(a3, {0, 3}), rep3), InputError);
}

#pragma once

// Named codes and the product operations on them.

#include <optional>
#include <string>

#include "crc/cr_analysis.hpp"

namespace crc {

/// Parity-check matrix whose columns are the points of PG(r-1, q): every nonzero
/// vector of GF(q)^r with first nonzero entry 1, in lexicographic order (row 0 most
/// significant). r >= 1; the public constructor below insists on r >= 2.
GFMatrix hamming_parity_check(unsigned r, const Alphabet& field);

/// The q-ary Hamming code of redundancy r >= 2: perfect, delta = 3, rho = 1.
Code hamming_code(unsigned r, unsigned q, std::uint64_t max_vertices = kDefaultMaxVertices);

/// [H | 0] with an all-ones row appended, H the binary Hamming check of redundancy r.
GFMatrix extended_hamming_parity_check(unsigned r);
/// Binary extended Hamming code of length 2^r: delta = 4, rho = 2.
Code extended_hamming_code(unsigned r, std::uint64_t max_vertices = kDefaultMaxVertices);

/// [I | 1]: parity check of the binary repetition code of length `length` (>= 2).
GFMatrix repetition_parity_check(unsigned length, const Alphabet& field);
Code repetition_code(unsigned n, unsigned q, std::uint64_t max_vertices = kDefaultMaxVertices);

/// [H | H | ... | H], s copies.
GFMatrix replicate_columns(const GFMatrix& h, unsigned s);

/// C x C' in H(n+n', q); the left factor occupies the low-order coordinates.
/// Linear when both factors are linear (block-diagonal parity check).
Code cartesian_product(const Code& left, const Code& right);

/// Q x C, the free coordinate at position 0.
Code pad(const Code& c);

/// The whole space Q^n as a code.
Code full_space_code(unsigned n, const Alphabet& alphabet, std::uint64_t max_vertices = kDefaultMaxVertices);

/// Outcome of the product criterion for complete regularity of C x C'.
struct ProductCompatibility {
  bool compatible = false;
  unsigned n1 = 0;
  unsigned n2 = 0;
  /// "a" (gamma_i = n1 i) or "b" (beta_{rho-i} = n2 i) when incompatible.
  std::string failing_condition;
  std::string detail;
  /// Predicted data of the product when compatible.
  unsigned product_rho = 0;
  std::optional<IntersectionNumbers> product_numbers;
};

/// Both factors must be completely regular with rho >= 1 (InputError otherwise).
/// `q` is the common alphabet size, used for the product valency.
ProductCompatibility product_cr_criterion(const IntersectionNumbers& left, unsigned left_length,
                                          const IntersectionNumbers& right, unsigned right_length, unsigned q);

/// Certifies both factors first; throws InputError when either is not CR or trivial.
ProductCompatibility product_cr_criterion(const Code& left, const Code& right);

}  // namespace crc

#pragma once

// Distance partitions, complete-regularity certificates, the quotient matrix U
// and exact spectra of completely regular codes in H(n,q).

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "crc/hamming_space.hpp"

namespace crc {

/// Classes C_i = {x : d(x,C) = i}, 0 <= i <= rho, over all q^n vertices.
struct DistancePartition {
  unsigned rho = 0;
  std::vector<std::uint8_t> class_of;
  std::vector<std::uint64_t> class_sizes;
};

/// Multi-source BFS from all codewords.
DistancePartition distance_partition(const Code& c);
unsigned covering_radius(const Code& c);

/// gamma_i / alpha_i / beta_i: neighbors of a vertex of C_i in C_{i-1} / C_i / C_{i+1}.
struct IntersectionNumbers {
  std::vector<unsigned> gamma;
  std::vector<unsigned> alpha;
  std::vector<unsigned> beta;

  unsigned rho() const noexcept { return static_cast<unsigned>(gamma.size()) - 1; }
  unsigned valency() const noexcept { return gamma[0] + alpha[0] + beta[0]; }

  friend bool operator==(const IntersectionNumbers&, const IntersectionNumbers&) = default;
};

enum class CountDirection { gamma, alpha, beta };
const char* to_string(CountDirection d) noexcept;

/// Two vertices of the same distance class whose neighbor counts disagree.
struct CrWitness {
  Word reference;
  Word vertex;
  unsigned distance_class;
  CountDirection direction;
  unsigned reference_count;
  unsigned vertex_count;
};

struct CrCertificate {
  bool completely_regular = false;
  unsigned rho = 0;
  std::optional<IntersectionNumbers> numbers;
  std::optional<CrWitness> witness;
};

/// Checks that every vertex of C_i has the same (gamma, alpha, beta) counts.
CrCertificate certify_completely_regular(const Code& c);
CrCertificate certify_completely_regular(const AmbientSpace& ambient, const DistancePartition& partition);

/// Neighbor counts of x toward C_{i-1}, C_i, C_{i+1}, where i = d(x,C),
/// computed by brute-force distances to every codeword. Used to replay witnesses.
struct DirectCounts {
  unsigned distance_class;
  unsigned gamma;
  unsigned alpha;
  unsigned beta;
};
DirectCounts direct_neighbor_counts(const Code& c, Word x);

/// The tridiagonal (rho+1)x(rho+1) matrix with sub-diagonal gamma, diagonal alpha
/// and super-diagonal beta.
class QuotientMatrix {
 public:
  static QuotientMatrix from_numbers(const IntersectionNumbers& numbers, unsigned valency);

  unsigned rho() const noexcept { return static_cast<unsigned>(diagonal_.size()) - 1; }
  std::int64_t operator()(std::size_t i, std::size_t j) const noexcept;
  std::vector<std::vector<std::int64_t>> to_rows() const;

  const std::vector<std::int64_t>& diagonal() const noexcept { return diagonal_; }
  const std::vector<std::int64_t>& upper() const noexcept { return upper_; }
  const std::vector<std::int64_t>& lower() const noexcept { return lower_; }

 private:
  std::vector<std::int64_t> diagonal_;
  std::vector<std::int64_t> upper_;  // (i, i+1)
  std::vector<std::int64_t> lower_;  // (i+1, i)
};

inline QuotientMatrix quotient_matrix(const IntersectionNumbers& numbers, unsigned valency) {
  return QuotientMatrix::from_numbers(numbers, valency);
}

/// det(M - theta I) for the tridiagonal M given by its three bands, exactly.
BigInt tridiagonal_determinant(std::span<const std::int64_t> diagonal, std::span<const std::int64_t> upper,
                               std::span<const std::int64_t> lower, std::int64_t theta);

/// Coefficients (constant term first) of det(lambda I - M), which is monic.
std::vector<BigInt> tridiagonal_characteristic_polynomial(std::span<const std::int64_t> diagonal,
                                                          std::span<const std::int64_t> upper,
                                                          std::span<const std::int64_t> lower);

/// Strictly decreasing eigenvalue list.
struct CodeSpectrum {
  std::vector<std::int64_t> eigenvalues;
  friend bool operator==(const CodeSpectrum&, const CodeSpectrum&) = default;
};

/// Scans the ambient eigenvalues n(q-1) - qj and keeps the roots of det(U - theta I).
/// Throws InputError when fewer than rho+1 roots are found.
CodeSpectrum code_spectrum(const QuotientMatrix& u, const AmbientSpace& ambient);

/// {k - (gamma+beta) i : 0 <= i <= rho} for the matrix with gamma_i = i*gamma,
/// beta_i = (rho-i)*beta, alpha_i = k - i*gamma - (rho-i)*beta. The closed form is
/// checked against the expanded characteristic polynomial before returning.
CodeSpectrum tridiagonal_formula_spectrum(std::int64_t k, std::int64_t gamma, std::int64_t beta, unsigned rho);

/// The three bands of that matrix.
struct TridiagonalBands {
  std::vector<std::int64_t> diagonal, upper, lower;
};
TridiagonalBands arithmetic_tridiagonal(std::int64_t k, std::int64_t gamma, std::int64_t beta, unsigned rho);

struct ArithmeticCertificate {
  bool arithmetic = false;
  unsigned t = 0;
  bool degenerate = false;  // rho = 0: nothing to space out, t is 0 by convention
};

/// Spec = {n(q-1) - q t i : 0 <= i <= rho} for a positive integer t.
ArithmeticCertificate arithmetic_certificate(const CodeSpectrum& spectrum, const AmbientSpace& ambient);

struct BoundsReport {
  /// (alpha_0 - gamma_1) - eta_rho, nonnegative when the smallest-eigenvalue bound holds.
  std::optional<std::int64_t> smallest_eigenvalue_slack;
  /// q rho t - (n(q-1) - alpha_0), only for arithmetic spectra.
  std::optional<std::int64_t> qrt_slack;
};

BoundsReport eigenvalue_bounds_check(const IntersectionNumbers& numbers, const CodeSpectrum& spectrum,
                                     const ArithmeticCertificate& arithmetic, const AmbientSpace& ambient);

struct ReducedCode {
  Code code;
  std::vector<unsigned> stripped_coordinates;  // original indices, in stripping order
};

/// Strips coordinates on which C is invariant under every symbol substitution,
/// lowest index first, until none remain (a code of length 1 is never stripped further).
ReducedCode reduce_code(const Code& c);
bool is_reduced(const Code& c);

/// One-stop analysis of a code.
struct CrAnalysis {
  DistancePartition partition;
  CrCertificate certificate;
  std::optional<unsigned> minimum_distance;  // absent for |C| = 1
  // Present only when completely regular:
  std::optional<QuotientMatrix> u;
  std::optional<CodeSpectrum> spectrum;
  std::optional<ArithmeticCertificate> arithmetic;
  std::optional<BoundsReport> bounds;
};

CrAnalysis analyze(const Code& c);

}  // namespace crc

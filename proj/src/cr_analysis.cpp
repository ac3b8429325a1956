#include "crc/cr_analysis.hpp"

#include <algorithm>
#include <string>

#include "crc/error.hpp"

namespace crc {

const char* to_string(CountDirection d) noexcept {
  switch (d) {
    case CountDirection::gamma: return "gamma";
    case CountDirection::alpha: return "alpha";
    case CountDirection::beta: return "beta";
  }
  return "?";
}

DistancePartition distance_partition(const Code& c) {
  const AmbientSpace& a = c.ambient();
  const std::uint64_t count = a.vertex_count();
  constexpr std::uint8_t unseen = 0xff;
  DistancePartition p;
  p.class_of.assign(count, unseen);
  std::vector<Word> frontier(c.members().begin(), c.members().end());
  for (Word w : frontier) p.class_of[w] = 0;
  p.class_sizes.push_back(frontier.size());
  std::vector<Word> next;
  std::uint8_t level = 0;
  while (true) {
    next.clear();
    for (Word w : frontier)
      a.for_each_neighbor(w, [&](Word v) {
        if (p.class_of[v] == unseen) {
          p.class_of[v] = static_cast<std::uint8_t>(level + 1);
          next.push_back(v);
        }
      });
    if (next.empty()) break;
    ++level;
    p.class_sizes.push_back(next.size());
    frontier.swap(next);
  }
  p.rho = level;
  return p;
}

unsigned covering_radius(const Code& c) { return distance_partition(c).rho; }

CrCertificate certify_completely_regular(const AmbientSpace& a, const DistancePartition& p) {
  const std::uint64_t count = a.vertex_count();
  const unsigned rho = p.rho;
  CrCertificate cert;
  cert.rho = rho;
  constexpr Word none = ~Word{0};
  std::vector<Word> reference(rho + 1, none);
  IntersectionNumbers nums;
  nums.gamma.assign(rho + 1, 0);
  nums.alpha.assign(rho + 1, 0);
  nums.beta.assign(rho + 1, 0);

  for (Word x = 0; x < count; ++x) {
    const unsigned i = p.class_of[x];
    unsigned g = 0, al = 0, b = 0;
    a.for_each_neighbor(x, [&](Word v) {
      const unsigned j = p.class_of[v];
      if (j + 1 == i) ++g;
      else if (j == i) ++al;
      else ++b;  // BFS layering leaves only i+1
    });
    if (reference[i] == none) {
      reference[i] = x;
      nums.gamma[i] = g;
      nums.alpha[i] = al;
      nums.beta[i] = b;
      continue;
    }
    auto fail = [&](CountDirection d, unsigned ref, unsigned got) {
      cert.completely_regular = false;
      cert.witness = CrWitness{reference[i], x, i, d, ref, got};
    };
    if (g != nums.gamma[i]) {
      fail(CountDirection::gamma, nums.gamma[i], g);
      return cert;
    }
    if (al != nums.alpha[i]) {
      fail(CountDirection::alpha, nums.alpha[i], al);
      return cert;
    }
    if (b != nums.beta[i]) {
      fail(CountDirection::beta, nums.beta[i], b);
      return cert;
    }
  }
  cert.completely_regular = true;
  cert.numbers = std::move(nums);
  return cert;
}

CrCertificate certify_completely_regular(const Code& c) {
  return certify_completely_regular(c.ambient(), distance_partition(c));
}

DirectCounts direct_neighbor_counts(const Code& c, Word x) {
  const AmbientSpace& a = c.ambient();
  auto dist_to_code = [&](Word y) {
    unsigned best = a.length();
    for (Word w : c.members()) best = std::min(best, a.distance(y, w));
    return best;
  };
  DirectCounts out{dist_to_code(x), 0, 0, 0};
  a.for_each_neighbor(x, [&](Word v) {
    const unsigned j = dist_to_code(v);
    if (j + 1 == out.distance_class) ++out.gamma;
    else if (j == out.distance_class) ++out.alpha;
    else if (j == out.distance_class + 1) ++out.beta;
  });
  return out;
}

// ---------------------------------------------------------------------------

QuotientMatrix QuotientMatrix::from_numbers(const IntersectionNumbers& numbers, unsigned valency) {
  const unsigned rho = numbers.rho();
  if (numbers.alpha.size() != rho + 1 || numbers.beta.size() != rho + 1)
    throw InputError("intersection number arrays have unequal lengths");
  QuotientMatrix u;
  for (unsigned i = 0; i <= rho; ++i) {
    if (numbers.gamma[i] + numbers.alpha[i] + numbers.beta[i] != valency)
      throw TheoremViolation("row " + std::to_string(i) + " of U does not sum to the valency " +
                             std::to_string(valency));
    u.diagonal_.push_back(numbers.alpha[i]);
    if (i < rho) {
      u.upper_.push_back(numbers.beta[i]);
      u.lower_.push_back(numbers.gamma[i + 1]);
    }
  }
  return u;
}

std::int64_t QuotientMatrix::operator()(std::size_t i, std::size_t j) const noexcept {
  if (i == j) return diagonal_[i];
  if (j == i + 1) return upper_[i];
  if (i == j + 1) return lower_[j];
  return 0;
}

std::vector<std::vector<std::int64_t>> QuotientMatrix::to_rows() const {
  const std::size_t n = diagonal_.size();
  std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = (*this)(i, j);
  return rows;
}

BigInt tridiagonal_determinant(std::span<const std::int64_t> diagonal, std::span<const std::int64_t> upper,
                               std::span<const std::int64_t> lower, std::int64_t theta) {
  BigInt prev2 = 1;                       // p_{-1}
  BigInt prev1 = BigInt(diagonal[0]) - theta;  // p_0
  for (std::size_t i = 1; i < diagonal.size(); ++i) {
    BigInt cur = (BigInt(diagonal[i]) - theta) * prev1 - BigInt(upper[i - 1]) * lower[i - 1] * prev2;
    prev2 = std::move(prev1);
    prev1 = std::move(cur);
  }
  return prev1;
}

std::vector<BigInt> tridiagonal_characteristic_polynomial(std::span<const std::int64_t> diagonal,
                                                          std::span<const std::int64_t> upper,
                                                          std::span<const std::int64_t> lower) {
  // P_{-1} = 1, P_0 = lambda - a_0, P_i = (lambda - a_i) P_{i-1} - u_{i-1} l_{i-1} P_{i-2}
  std::vector<BigInt> prev2{1};
  std::vector<BigInt> prev1{-BigInt(diagonal[0]), 1};
  for (std::size_t i = 1; i < diagonal.size(); ++i) {
    std::vector<BigInt> cur(prev1.size() + 1, 0);
    for (std::size_t d = 0; d < prev1.size(); ++d) {
      cur[d + 1] += prev1[d];
      cur[d] -= BigInt(diagonal[i]) * prev1[d];
    }
    const BigInt off = BigInt(upper[i - 1]) * lower[i - 1];
    for (std::size_t d = 0; d < prev2.size(); ++d) cur[d] -= off * prev2[d];
    prev2 = std::move(prev1);
    prev1 = std::move(cur);
  }
  return prev1;
}

CodeSpectrum code_spectrum(const QuotientMatrix& u, const AmbientSpace& ambient) {
  const std::int64_t k = ambient.valency();
  const std::int64_t q = ambient.q();
  CodeSpectrum s;
  for (unsigned j = 0; j <= ambient.length(); ++j) {
    const std::int64_t theta = k - q * j;
    if (tridiagonal_determinant(u.diagonal(), u.upper(), u.lower(), theta) == 0) s.eigenvalues.push_back(theta);
  }
  if (s.eigenvalues.size() != u.rho() + 1)
    throw InputError("quotient matrix has " + std::to_string(s.eigenvalues.size()) +
                     " eigenvalues among the ambient eigenvalues, expected " + std::to_string(u.rho() + 1));
  return s;
}

TridiagonalBands arithmetic_tridiagonal(std::int64_t k, std::int64_t gamma, std::int64_t beta, unsigned rho) {
  if (k <= 0 || gamma <= 0 || beta <= 0 || rho == 0) throw InputError("k, gamma, beta and rho must be positive");
  TridiagonalBands b;
  for (unsigned i = 0; i <= rho; ++i) {
    const std::int64_t alpha = k - static_cast<std::int64_t>(i) * gamma - static_cast<std::int64_t>(rho - i) * beta;
    if (alpha < 0) throw InputError("alpha_" + std::to_string(i) + " = " + std::to_string(alpha) + " is negative");
    b.diagonal.push_back(alpha);
    if (i < rho) {
      b.upper.push_back(static_cast<std::int64_t>(rho - i) * beta);
      b.lower.push_back(static_cast<std::int64_t>(i + 1) * gamma);
    }
  }
  return b;
}

CodeSpectrum tridiagonal_formula_spectrum(std::int64_t k, std::int64_t gamma, std::int64_t beta, unsigned rho) {
  const TridiagonalBands bands = arithmetic_tridiagonal(k, gamma, beta, rho);
  CodeSpectrum s;
  for (unsigned i = 0; i <= rho; ++i) s.eigenvalues.push_back(k - (gamma + beta) * static_cast<std::int64_t>(i));

  // prod (lambda - eta_i) must equal det(lambda I - L) coefficient by coefficient.
  std::vector<BigInt> expected{1};
  for (std::int64_t eta : s.eigenvalues) {
    std::vector<BigInt> next(expected.size() + 1, 0);
    for (std::size_t d = 0; d < expected.size(); ++d) {
      next[d + 1] += expected[d];
      next[d] -= BigInt(eta) * expected[d];
    }
    expected = std::move(next);
  }
  if (tridiagonal_characteristic_polynomial(bands.diagonal, bands.upper, bands.lower) != expected)
    throw TheoremViolation("closed-form tridiagonal spectrum disagrees with the characteristic polynomial");
  for (std::int64_t eta : s.eigenvalues)
    if (tridiagonal_determinant(bands.diagonal, bands.upper, bands.lower, eta) != 0)
      throw TheoremViolation("closed-form eigenvalue is not a root of the determinant recurrence");
  return s;
}

ArithmeticCertificate arithmetic_certificate(const CodeSpectrum& spectrum, const AmbientSpace& ambient) {
  const auto& ev = spectrum.eigenvalues;
  ArithmeticCertificate cert;
  if (ev.empty() || ev.front() != static_cast<std::int64_t>(ambient.valency())) return cert;
  if (ev.size() == 1) {
    cert.arithmetic = true;
    cert.degenerate = true;
    return cert;
  }
  const std::int64_t gap = ev[0] - ev[1];
  const std::int64_t q = ambient.q();
  if (gap <= 0 || gap % q != 0) return cert;
  for (std::size_t i = 1; i + 1 < ev.size(); ++i)
    if (ev[i] - ev[i + 1] != gap) return cert;
  cert.arithmetic = true;
  cert.t = static_cast<unsigned>(gap / q);
  return cert;
}

BoundsReport eigenvalue_bounds_check(const IntersectionNumbers& numbers, const CodeSpectrum& spectrum,
                                     const ArithmeticCertificate& arithmetic, const AmbientSpace& ambient) {
  BoundsReport r;
  const unsigned rho = numbers.rho();
  if (rho == 0) return r;
  const std::int64_t alpha0 = numbers.alpha[0];
  const std::int64_t gamma1 = numbers.gamma[1];
  r.smallest_eigenvalue_slack = (alpha0 - gamma1) - spectrum.eigenvalues.back();
  if (arithmetic.arithmetic && !arithmetic.degenerate)
    r.qrt_slack = static_cast<std::int64_t>(ambient.q()) * rho * arithmetic.t -
                  (static_cast<std::int64_t>(ambient.valency()) - alpha0);
  return r;
}

// ---------------------------------------------------------------------------

namespace {

bool coordinate_is_free(const Code& c, unsigned i) {
  const AmbientSpace& a = c.ambient();
  for (Word w : c.members())
    for (Symbol s = 0; s < a.q(); ++s)
      if (!c.contains(a.with_digit(w, i, s))) return false;
  return true;
}

Code strip_coordinate(const Code& c, unsigned i) {
  const AmbientSpace& a = c.ambient();
  AmbientSpace smaller(a.length() - 1, a.alphabet(), a.max_vertices());
  if (c.is_linear()) {
    const GFMatrix& g = c.linear().generator;
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < g.cols(); ++j)
      if (j != i) keep.push_back(j);
    return Code::from_generators(g.select_columns(keep), a.max_vertices());
  }
  std::vector<Word> words;
  words.reserve(c.size() / a.q());
  for (Word w : c.members()) {
    if (a.digit(w, i) != 0) continue;
    std::vector<Symbol> d = a.decode(w);
    d.erase(d.begin() + i);
    words.push_back(smaller.encode(d));
  }
  return Code::from_words(std::move(smaller), std::move(words));
}

}  // namespace

ReducedCode reduce_code(const Code& c) {
  ReducedCode out{c, {}};
  std::vector<unsigned> original(c.length());
  for (unsigned i = 0; i < c.length(); ++i) original[i] = i;
  bool changed = true;
  while (changed && out.code.length() > 1) {
    changed = false;
    for (unsigned i = 0; i < out.code.length(); ++i) {
      if (!coordinate_is_free(out.code, i)) continue;
      out.code = strip_coordinate(out.code, i);
      out.stripped_coordinates.push_back(original[i]);
      original.erase(original.begin() + i);
      changed = true;
      break;
    }
  }
  return out;
}

bool is_reduced(const Code& c) {
  if (c.length() == 1) return true;
  for (unsigned i = 0; i < c.length(); ++i)
    if (coordinate_is_free(c, i)) return false;
  return true;
}

CrAnalysis analyze(const Code& c) {
  CrAnalysis a;
  a.partition = distance_partition(c);
  a.certificate = certify_completely_regular(c.ambient(), a.partition);
  if (c.size() >= 2) a.minimum_distance = minimum_distance(c);
  if (a.certificate.completely_regular) {
    const IntersectionNumbers& nums = *a.certificate.numbers;
    a.u = quotient_matrix(nums, c.ambient().valency());
    a.spectrum = code_spectrum(*a.u, c.ambient());
    a.arithmetic = arithmetic_certificate(*a.spectrum, c.ambient());
    a.bounds = eigenvalue_bounds_check(nums, *a.spectrum, *a.arithmetic, c.ambient());
  }
  return a;
}

}  // namespace crc

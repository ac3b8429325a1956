#include "crc/constructions.hpp"

#include <algorithm>

#include "crc/error.hpp"

namespace crc {

GFMatrix hamming_parity_check(unsigned r, const Alphabet& f) {
  f.require_field("Hamming construction");
  if (r == 0) throw InputError("Hamming redundancy must be positive");
  const unsigned q = f.size();
  std::vector<std::vector<Symbol>> columns;
  // Vectors in lexicographic order with row 0 as most significant digit.
  std::uint64_t total = 1;
  for (unsigned i = 0; i < r; ++i) {
    total *= q;
    if (total > (std::uint64_t{1} << 26)) throw CapacityError("Hamming parity check is too large");
  }
  for (std::uint64_t v = 1; v < total; ++v) {
    std::vector<Symbol> col(r);
    std::uint64_t x = v;
    for (unsigned i = r; i-- > 0;) {
      col[i] = static_cast<Symbol>(x % q);
      x /= q;
    }
    const auto lead = std::find_if(col.begin(), col.end(), [](Symbol s) { return s != 0; });
    if (*lead == 1) columns.push_back(std::move(col));
  }
  GFMatrix h(f, r, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (unsigned i = 0; i < r; ++i) h(i, c) = columns[c][i];
  return h;
}

Code hamming_code(unsigned r, unsigned q, std::uint64_t max_vertices) {
  if (r < 2) throw InputError("Hamming codes need redundancy r >= 2");
  const Alphabet f = Alphabet::construct(q);
  if (!f.is_field()) throw InputError("Hamming codes need a prime-power alphabet, got q = " + std::to_string(q));
  return Code::from_parity_check(hamming_parity_check(r, f), max_vertices);
}

GFMatrix extended_hamming_parity_check(unsigned r) {
  if (r < 2) throw InputError("extended Hamming codes need r >= 2");
  const Alphabet f = Alphabet::construct(2);
  const GFMatrix h = hamming_parity_check(r, f);
  GFMatrix e(f, r + 1, h.cols() + 1);
  for (unsigned i = 0; i < r; ++i)
    for (std::size_t c = 0; c < h.cols(); ++c) e(i, c) = h(i, c);
  for (std::size_t c = 0; c < e.cols(); ++c) e(r, c) = 1;
  return e;
}

Code extended_hamming_code(unsigned r, std::uint64_t max_vertices) {
  return Code::from_parity_check(extended_hamming_parity_check(r), max_vertices);
}

GFMatrix repetition_parity_check(unsigned length, const Alphabet& f) {
  f.require_field("repetition parity check");
  if (length < 2) throw InputError("repetition parity check needs length >= 2");
  GFMatrix m(f, length - 1, length);
  for (unsigned i = 0; i + 1 < length; ++i) {
    m(i, i) = 1;
    m(i, length - 1) = f.neg(1);
  }
  return m;
}

Code repetition_code(unsigned n, unsigned q, std::uint64_t max_vertices) {
  const Alphabet f = Alphabet::construct(q);
  AmbientSpace ambient(n, f, max_vertices);
  if (f.is_field()) {
    GFMatrix g(f, 1, n);
    for (unsigned c = 0; c < n; ++c) g(0, c) = 1;
    return Code::from_generators(g, max_vertices);
  }
  std::vector<Word> words;
  for (Symbol s = 0; s < q; ++s) {
    std::vector<Symbol> d(n, s);
    words.push_back(ambient.encode(d));
  }
  return Code::from_words(ambient, std::move(words));
}

GFMatrix replicate_columns(const GFMatrix& h, unsigned s) {
  if (s == 0) throw InputError("replication count must be positive");
  GFMatrix out(h.alphabet(), h.rows(), h.cols() * s);
  for (unsigned b = 0; b < s; ++b)
    for (std::size_t r = 0; r < h.rows(); ++r)
      for (std::size_t c = 0; c < h.cols(); ++c) out(r, b * h.cols() + c) = h(r, c);
  return out;
}

Code full_space_code(unsigned n, const Alphabet& alphabet, std::uint64_t max_vertices) {
  AmbientSpace ambient(n, alphabet, max_vertices);
  if (alphabet.is_field()) {
    GFMatrix g(alphabet, n, n);
    for (unsigned i = 0; i < n; ++i) g(i, i) = 1;
    return Code::from_generators(g, max_vertices);
  }
  std::vector<Word> words(ambient.vertex_count());
  for (Word w = 0; w < words.size(); ++w) words[w] = w;
  return Code::from_words(ambient, std::move(words));
}

namespace {

GFMatrix block_diagonal(const GFMatrix& a, const GFMatrix& b) {
  GFMatrix out(a.alphabet(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, a.cols() + c) = b(r, c);
  return out;
}

}  // namespace

Code cartesian_product(const Code& left, const Code& right) {
  const AmbientSpace& la = left.ambient();
  const AmbientSpace& ra = right.ambient();
  if (!(la.alphabet() == ra.alphabet()))
    throw InputError("cartesian products need a common alphabet (got q = " + std::to_string(la.q()) + " and " +
                     std::to_string(ra.q()) + ")");
  const std::uint64_t cap = std::max(la.max_vertices(), ra.max_vertices());
  if (left.is_linear() && right.is_linear())
    return Code::from_parity_check(block_diagonal(left.linear().parity_check, right.linear().parity_check), cap);
  AmbientSpace ambient(la.length() + ra.length(), la.alphabet(), cap);
  ambient.vertex_count();
  const Word shift = ambient.unit(la.length());  // q^n
  std::vector<Word> words;
  words.reserve(left.size() * right.size());
  for (Word r : right.members())
    for (Word l : left.members()) words.push_back(l + r * shift);
  return Code::from_words(std::move(ambient), std::move(words));
}

Code pad(const Code& c) {
  return cartesian_product(full_space_code(1, c.ambient().alphabet(), c.ambient().max_vertices()), c);
}

ProductCompatibility product_cr_criterion(const IntersectionNumbers& left, unsigned left_length,
                                          const IntersectionNumbers& right, unsigned right_length, unsigned q) {
  const unsigned rho = left.rho();
  const unsigned rho2 = right.rho();
  if (rho == 0 || rho2 == 0) throw InputError("the product criterion needs covering radius >= 1 on both factors");
  ProductCompatibility out;
  const unsigned n1 = left.gamma[1];
  auto gamma_ok = [n1](const IntersectionNumbers& x) {
    for (unsigned i = 0; i <= x.rho(); ++i)
      if (x.gamma[i] != n1 * i) return false;
    return true;
  };
  if (!gamma_ok(left) || !gamma_ok(right)) {
    out.failing_condition = "a";
    out.detail = "gamma_i is not n1*i on both factors";
    return out;
  }
  const unsigned n2 = left.beta[rho - 1];
  auto beta_ok = [n2](const IntersectionNumbers& x) {
    const unsigned r = x.rho();
    for (unsigned i = 0; i <= r; ++i)
      if (x.beta[r - i] != n2 * i) return false;
    return true;
  };
  if (!beta_ok(left) || !beta_ok(right)) {
    out.failing_condition = "b";
    out.detail = "beta_{rho-i} is not n2*i on both factors (left n2 = " + std::to_string(n2) + ", right n2 = " +
                 std::to_string(right.beta[rho2 - 1]) + ")";
    return out;
  }
  out.compatible = true;
  out.n1 = n1;
  out.n2 = n2;
  out.product_rho = rho + rho2;
  const unsigned k = (left_length + right_length) * (q - 1);
  IntersectionNumbers p;
  for (unsigned i = 0; i <= out.product_rho; ++i) {
    const unsigned g = n1 * i;
    const unsigned b = n2 * (out.product_rho - i);
    p.gamma.push_back(g);
    p.beta.push_back(b);
    p.alpha.push_back(k - g - b);
  }
  out.product_numbers = std::move(p);
  return out;
}

ProductCompatibility product_cr_criterion(const Code& left, const Code& right) {
  if (!(left.ambient().alphabet() == right.ambient().alphabet()))
    throw InputError("the product criterion needs a common alphabet");
  if (left.is_trivial() || right.is_trivial()) throw InputError("the product criterion needs non-trivial factors");
  const CrCertificate a = certify_completely_regular(left);
  const CrCertificate b = certify_completely_regular(right);
  if (!a.completely_regular || !b.completely_regular)
    throw InputError("both factors must be completely regular for the product criterion");
  return product_cr_criterion(*a.numbers, left.length(), *b.numbers, right.length(), left.q());
}

}  // namespace crc

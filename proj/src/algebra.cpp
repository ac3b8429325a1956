#include "crc/algebra.hpp"

#include <algorithm>
#include <string>

#include "crc/error.hpp"

namespace crc {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::input: return "input";
    case ErrorKind::unsupported: return "unsupported";
    case ErrorKind::capacity: return "capacity";
    case ErrorKind::theorem_violation: return "theorem_violation";
  }
  return "unknown";
}

struct Alphabet::Tables {
  unsigned q = 0;
  AlphabetKind kind = AlphabetKind::cyclic_group;
  unsigned p = 0;
  unsigned e = 1;
  std::vector<Symbol> modulus;
  std::vector<Symbol> add;  // q*q
  std::vector<Symbol> neg;  // q
  std::vector<Symbol> mul;  // q*q, field only
  std::vector<Symbol> inv;  // q, field only; inv[0] unused
};

bool is_prime(unsigned x) noexcept {
  if (x < 2) return false;
  for (unsigned d = 2; d * d <= x; ++d)
    if (x % d == 0) return false;
  return true;
}

std::pair<unsigned, unsigned> prime_power_decomposition(unsigned q) noexcept {
  if (q < 2) return {0, 0};
  unsigned p = 2;
  while (q % p != 0) ++p;
  unsigned e = 0;
  unsigned rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) return {0, 0};
  return {p, e};
}

namespace {

using Poly = std::vector<unsigned>;  // coefficient i at index i, over GF(p)

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic b over GF(p).
Poly poly_mod(Poly a, const Poly& b, unsigned p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const unsigned lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = (a[shift + i] + p * p - lead * b[i] % p) % p;
    trim(a);
  }
  return a;
}

Poly poly_from_key(unsigned key, unsigned p, unsigned degree, bool monic) {
  Poly a(degree + (monic ? 1 : 0), 0);
  for (unsigned i = 0; i < degree; ++i) {
    a[i] = key % p;
    key /= p;
  }
  if (monic) a[degree] = 1;
  return a;
}

unsigned ipow(unsigned base, unsigned exp) {
  unsigned r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

bool is_irreducible(const Poly& f, unsigned p) {
  const unsigned degree = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; d <= degree / 2; ++d) {
    for (unsigned key = 0; key < ipow(p, d); ++key) {
      const Poly g = poly_from_key(key, p, d, true);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

Poly smallest_irreducible(unsigned p, unsigned degree) {
  for (unsigned key = 0; key < ipow(p, degree); ++key) {
    Poly f = poly_from_key(key, p, degree, true);
    if (is_irreducible(f, p)) return f;
  }
  return {};  // unreachable: irreducibles exist in every degree
}

std::shared_ptr<Alphabet::Tables> make_cyclic(unsigned q) {
  auto t = std::make_shared<Alphabet::Tables>();
  t->q = q;
  t->kind = AlphabetKind::cyclic_group;
  t->p = q;
  t->e = 1;
  t->add.resize(std::size_t{q} * q);
  t->neg.resize(q);
  for (unsigned a = 0; a < q; ++a) {
    t->neg[a] = (q - a) % q;
    for (unsigned b = 0; b < q; ++b) t->add[a * q + b] = (a + b) % q;
  }
  return t;
}

std::shared_ptr<Alphabet::Tables> make_field(unsigned q, unsigned p, unsigned e) {
  auto t = std::make_shared<Alphabet::Tables>();
  t->q = q;
  t->kind = AlphabetKind::field;
  t->p = p;
  t->e = e;
  std::vector<Poly> elems(q);
  for (unsigned a = 0; a < q; ++a) elems[a] = poly_from_key(a, p, e, false);
  auto label = [&](const Poly& a) {
    unsigned v = 0;
    for (std::size_t i = a.size(); i-- > 0;) v = v * p + a[i];
    return v;
  };
  Poly modulus;
  if (e >= 2) {
    modulus = smallest_irreducible(p, e);
    t->modulus.assign(modulus.begin(), modulus.end());
  }
  t->add.resize(std::size_t{q} * q);
  t->mul.resize(std::size_t{q} * q);
  t->neg.resize(q);
  t->inv.assign(q, 0);
  for (unsigned a = 0; a < q; ++a) {
    Poly n(e);
    for (unsigned i = 0; i < e; ++i) n[i] = (p - elems[a][i]) % p;
    t->neg[a] = label(n);
    for (unsigned b = 0; b < q; ++b) {
      Poly s(e);
      for (unsigned i = 0; i < e; ++i) s[i] = (elems[a][i] + elems[b][i]) % p;
      t->add[a * q + b] = label(s);
      if (e == 1) {
        t->mul[a * q + b] = (a * b) % p;
      } else {
        Poly prod(2 * e - 1, 0);
        for (unsigned i = 0; i < e; ++i)
          for (unsigned j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + elems[a][i] * elems[b][j]) % p;
        Poly r = poly_mod(prod, modulus, p);
        r.resize(e, 0);
        t->mul[a * q + b] = label(r);
      }
    }
  }
  for (unsigned a = 1; a < q; ++a)
    for (unsigned b = 1; b < q; ++b)
      if (t->mul[a * q + b] == 1) t->inv[a] = b;
  return t;
}

}  // namespace

Alphabet Alphabet::construct(unsigned q) {
  if (q < 2) throw InputError("alphabet size must be at least 2, got " + std::to_string(q));
  if (q > kMaxAlphabetSize) throw CapacityError("alphabet size " + std::to_string(q) + " exceeds the supported maximum");
  const auto [p, e] = prime_power_decomposition(q);
  if (p == 0) return Alphabet(make_cyclic(q));
  return Alphabet(make_field(q, p, e));
}

Alphabet Alphabet::cyclic(unsigned q) {
  if (q < 2) throw InputError("alphabet size must be at least 2, got " + std::to_string(q));
  if (q > kMaxAlphabetSize) throw CapacityError("alphabet size " + std::to_string(q) + " exceeds the supported maximum");
  return Alphabet(make_cyclic(q));
}

unsigned Alphabet::size() const noexcept { return t_->q; }
AlphabetKind Alphabet::kind() const noexcept { return t_->kind; }
unsigned Alphabet::characteristic() const noexcept { return t_->p; }
unsigned Alphabet::degree() const noexcept { return t_->e; }
const std::vector<Symbol>& Alphabet::modulus() const noexcept { return t_->modulus; }

Symbol Alphabet::add(Symbol a, Symbol b) const noexcept { return t_->add[a * t_->q + b]; }
Symbol Alphabet::sub(Symbol a, Symbol b) const noexcept { return t_->add[a * t_->q + t_->neg[b]]; }
Symbol Alphabet::neg(Symbol a) const noexcept { return t_->neg[a]; }

Symbol Alphabet::mul(Symbol a, Symbol b) const {
  require_field("multiplication");
  return t_->mul[a * t_->q + b];
}

Symbol Alphabet::inv(Symbol a) const {
  require_field("inversion");
  if (a == 0) throw InputError("inverse of zero");
  return t_->inv[a];
}

void Alphabet::require_field(const char* operation) const {
  if (!is_field())
    throw UnsupportedOperation(std::string(operation) + " requires a field alphabet; Z_" + std::to_string(size()) +
                               " is only a group");
}

// ---------------------------------------------------------------------------

GFMatrix::GFMatrix(Alphabet alphabet, std::size_t rows, std::size_t cols)
    : alphabet_(std::move(alphabet)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

GFMatrix GFMatrix::from_rows(Alphabet alphabet, const std::vector<std::vector<Symbol>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  GFMatrix m(alphabet, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("matrix rows have unequal lengths");
    for (std::size_t c = 0; c < cols; ++c) {
      if (rows[r][c] >= alphabet.size())
        throw InputError("matrix entry " + std::to_string(rows[r][c]) + " is not a symbol of the alphabet");
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

std::vector<Symbol> GFMatrix::column(std::size_t c) const {
  std::vector<Symbol> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<std::vector<Symbol>> GFMatrix::to_rows() const {
  std::vector<std::vector<Symbol>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r].assign(row(r).begin(), row(r).end());
  return out;
}

GFMatrix GFMatrix::select_columns(std::span<const std::size_t> columns) const {
  GFMatrix m(alphabet_, rows_, columns.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < columns.size(); ++c) m(r, c) = (*this)(r, columns[c]);
  return m;
}

GFMatrix GFMatrix::select_rows(std::size_t count) const {
  GFMatrix m(alphabet_, count, cols_);
  std::copy(data_.begin(), data_.begin() + static_cast<std::ptrdiff_t>(count * cols_), m.data_.begin());
  return m;
}

GFMatrix GFMatrix::transpose() const {
  GFMatrix m(alphabet_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
  return m;
}

RrefResult rref(const GFMatrix& input) {
  const Alphabet& f = input.alphabet();
  f.require_field("row reduction");
  GFMatrix m = input;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    const Symbol scale = f.inv(m(row, col));
    for (std::size_t c = 0; c < m.cols(); ++c) m(row, c) = f.mul(m(row, c), scale);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Symbol factor = m(r, col);
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = f.sub(m(r, c), f.mul(factor, m(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), row, std::move(pivots)};
}

std::size_t rank(const GFMatrix& m) { return rref(m).rank; }

GFMatrix nullspace_basis(const GFMatrix& m) {
  const Alphabet& f = m.alphabet();
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : r.pivot_columns) is_pivot[c] = true;
  GFMatrix basis(f, m.cols() - r.rank, m.cols());
  std::size_t out = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis(out, free) = 1;
    for (std::size_t i = 0; i < r.rank; ++i) basis(out, r.pivot_columns[i]) = f.neg(r.reduced(i, free));
    ++out;
  }
  return basis;
}

std::vector<Symbol> multiply(const GFMatrix& m, std::span<const Symbol> v) {
  const Alphabet& f = m.alphabet();
  if (v.size() != m.cols()) throw InputError("vector length does not match matrix columns");
  std::vector<Symbol> out(m.rows(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Symbol acc = 0;
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (v[c] != 0 && m(r, c) != 0) acc = f.add(acc, f.mul(m(r, c), v[c]));
    out[r] = acc;
  }
  return out;
}

GFMatrix multiply(const GFMatrix& a, const GFMatrix& b) {
  const Alphabet& f = a.alphabet();
  if (a.cols() != b.rows()) throw InputError("matrix shapes do not compose");
  GFMatrix out(f, a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) {
      Symbol acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) acc = f.add(acc, f.mul(a(r, k), b(k, c)));
      out(r, c) = acc;
    }
  return out;
}

GFMatrix inverse(const GFMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  GFMatrix aug(m.alphabet(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const RrefResult red = rref(aug);
  if (red.rank < n || red.pivot_columns[n - 1] != n - 1) throw InputError("matrix is singular");
  GFMatrix inv(m.alphabet(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = red.reduced(r, n + c);
  return inv;
}

Symbol normalize_projectively(const Alphabet& f, std::span<Symbol> v) {
  auto lead = std::find_if(v.begin(), v.end(), [](Symbol s) { return s != 0; });
  if (lead == v.end()) return 0;
  const Symbol scale = f.inv(*lead);
  for (Symbol& s : v) s = f.mul(s, scale);
  return scale;
}

}  // namespace crc

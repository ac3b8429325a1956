#pragma once

// Finite alphabets (GF(q) or Z_q) and dense linear algebra over GF(q).

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace crc {

using Symbol = std::uint32_t;

enum class AlphabetKind { field, cyclic_group };

/// Largest alphabet for which operation tables are built.
inline constexpr unsigned kMaxAlphabetSize = 1024;

/// A q-element alphabet with labels 0..q-1.
///
/// For a prime power q = p^e this is GF(q): label sum c_i p^i encodes the
/// polynomial sum c_i x^i, reduced modulo the lexicographically smallest monic
/// irreducible polynomial of degree e (lex key c_{e-1}, ..., c_0). For any other
/// q it is the cyclic group Z_q and the multiplicative operations throw.
///
/// Cheap to copy; all copies share one immutable table set.
class Alphabet {
 public:
  /// GF(q) when q is a prime power, otherwise Z_q. Check is_field() to tell.
  static Alphabet construct(unsigned q);
  /// Z_q regardless of whether q is a prime power.
  static Alphabet cyclic(unsigned q);

  unsigned size() const noexcept;
  AlphabetKind kind() const noexcept;
  bool is_field() const noexcept { return kind() == AlphabetKind::field; }
  /// p for GF(p^e); q for Z_q.
  unsigned characteristic() const noexcept;
  /// e for GF(p^e); 1 for Z_q.
  unsigned degree() const noexcept;
  /// Coefficients c_0..c_e of the defining monic polynomial (field, e >= 2), else empty.
  const std::vector<Symbol>& modulus() const noexcept;

  Symbol add(Symbol a, Symbol b) const noexcept;
  Symbol sub(Symbol a, Symbol b) const noexcept;
  Symbol neg(Symbol a) const noexcept;
  Symbol mul(Symbol a, Symbol b) const;
  Symbol inv(Symbol a) const;
  Symbol div(Symbol a, Symbol b) const { return mul(a, inv(b)); }

  /// Throws UnsupportedOperation unless this is a field.
  void require_field(const char* operation) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) noexcept {
    return a.size() == b.size() && a.kind() == b.kind();
  }

  struct Tables;

 private:
  explicit Alphabet(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
  std::shared_ptr<const Tables> t_;
};

bool is_prime(unsigned x) noexcept;
/// (p, e) with q = p^e, or nullopt-like {0, 0} when q is not a prime power.
std::pair<unsigned, unsigned> prime_power_decomposition(unsigned q) noexcept;

/// Dense row-major matrix of alphabet labels.
class GFMatrix {
 public:
  GFMatrix(Alphabet alphabet, std::size_t rows, std::size_t cols);
  /// Validates that every row has the same length and every entry is < q.
  static GFMatrix from_rows(Alphabet alphabet, const std::vector<std::vector<Symbol>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }

  Symbol operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  Symbol& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }

  std::span<const Symbol> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
  std::vector<Symbol> column(std::size_t c) const;
  std::vector<std::vector<Symbol>> to_rows() const;

  GFMatrix select_columns(std::span<const std::size_t> columns) const;
  GFMatrix select_rows(std::size_t count) const;
  GFMatrix transpose() const;

  friend bool operator==(const GFMatrix& a, const GFMatrix& b) noexcept {
    return a.alphabet_ == b.alphabet_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  Alphabet alphabet_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Symbol> data_;
};

struct RrefResult {
  GFMatrix reduced;
  std::size_t rank;
  std::vector<std::size_t> pivot_columns;
};

/// Unique reduced row-echelon form. Field alphabets only.
RrefResult rref(const GFMatrix& m);

std::size_t rank(const GFMatrix& m);

/// Basis of {x : M x^T = 0}, one row per free column in increasing order,
/// each with a 1 at its free column.
GFMatrix nullspace_basis(const GFMatrix& m);

/// M v^T for a vector of length M.cols().
std::vector<Symbol> multiply(const GFMatrix& m, std::span<const Symbol> v);

/// m1 * m2.
GFMatrix multiply(const GFMatrix& m1, const GFMatrix& m2);

/// Inverse of a square full-rank matrix; throws InputError when singular.
GFMatrix inverse(const GFMatrix& m);

/// Scales a nonzero vector so its first nonzero entry is 1. Returns the applied scalar
/// (0 for the zero vector, which is left unchanged).
Symbol normalize_projectively(const Alphabet& f, std::span<Symbol> v);

}  // namespace crc

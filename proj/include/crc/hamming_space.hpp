#pragma once

// Words of Q^n, the Hamming graph H(n,q), and explicitly stored codes.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "crc/algebra.hpp"

namespace crc {

using BigInt = boost::multiprecision::cpp_int;

/// Base-q integer encoding of a word; digit i is the symbol at coordinate i
/// (coordinate 0 is the lowest-order digit).
using Word = std::uint64_t;

inline constexpr std::uint64_t kDefaultMaxVertices = std::uint64_t{1} << 26;

/// The vertex set Q^n of H(n,q).
class AmbientSpace {
 public:
  AmbientSpace(unsigned n, Alphabet alphabet, std::uint64_t max_vertices = kDefaultMaxVertices);

  unsigned length() const noexcept { return n_; }
  unsigned q() const noexcept { return alphabet_.size(); }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  /// n(q-1), the valency of H(n,q).
  unsigned valency() const noexcept { return n_ * (q() - 1); }

  /// q^n exactly.
  BigInt capacity() const;
  std::uint64_t max_vertices() const noexcept { return max_vertices_; }
  bool materializable() const noexcept { return size_ <= max_vertices_; }
  /// q^n; throws CapacityError when above the materialization cap.
  std::uint64_t vertex_count() const;
  /// q^n without the cap check (the encoding range).
  std::uint64_t encoding_range() const noexcept { return size_; }

  Symbol digit(Word w, unsigned i) const noexcept { return static_cast<Symbol>((w / pow_[i]) % q()); }
  Word with_digit(Word w, unsigned i, Symbol s) const noexcept {
    return w - static_cast<Word>(digit(w, i)) * pow_[i] + static_cast<Word>(s) * pow_[i];
  }
  Word unit(unsigned i, Symbol s = 1) const noexcept { return static_cast<Word>(s) * pow_[i]; }
  Word encode(std::span<const Symbol> symbols) const;
  std::vector<Symbol> decode(Word w) const;
  /// Coordinate 0 first, e.g. "0102".
  std::string to_string(Word w) const;

  Word add(Word a, Word b) const noexcept;
  Word sub(Word a, Word b) const noexcept;
  Word scale(Symbol lambda, Word a) const;

  unsigned weight(Word w) const noexcept;
  unsigned distance(Word a, Word b) const noexcept;

  /// The n(q-1) words at distance 1: coordinate-major, then increasing symbol.
  std::vector<Word> neighbors(Word w) const;

  template <class F>
  void for_each_neighbor(Word w, F&& f) const {
    for (unsigned i = 0; i < n_; ++i) {
      const Symbol d = digit(w, i);
      const Word base = w - static_cast<Word>(d) * pow_[i];
      for (Symbol s = 0; s < q(); ++s)
        if (s != d) f(base + static_cast<Word>(s) * pow_[i]);
    }
  }

  bool same_space(const AmbientSpace& o) const noexcept { return n_ == o.n_ && alphabet_ == o.alphabet_; }

 private:
  unsigned n_;
  Alphabet alphabet_;
  std::uint64_t max_vertices_;
  std::uint64_t size_;
  std::vector<std::uint64_t> pow_;
};

/// Parity-check and generator matrices of a linear code.
struct LinearStructure {
  GFMatrix parity_check;  // as supplied (may have dependent rows)
  GFMatrix generator;     // reduced row-echelon basis of the code
};

/// A nonempty subset of Q^n, stored as sorted encodings plus a membership bitmap.
class Code {
 public:
  /// Throws InputError on duplicates, out-of-range words, or (when
  /// declared_additive) a set that is not closed under subtraction.
  static Code from_words(AmbientSpace ambient, std::vector<Word> words, bool declared_additive = false);
  static Code from_symbol_rows(AmbientSpace ambient, const std::vector<std::vector<Symbol>>& rows,
                               bool declared_additive = false);
  /// The right nullspace of H over GF(q).
  static Code from_parity_check(const GFMatrix& h, std::uint64_t max_vertices = kDefaultMaxVertices);
  /// The row space of G over GF(q).
  static Code from_generators(const GFMatrix& g, std::uint64_t max_vertices = kDefaultMaxVertices);

  const AmbientSpace& ambient() const noexcept { return ambient_; }
  unsigned length() const noexcept { return ambient_.length(); }
  unsigned q() const noexcept { return ambient_.q(); }
  const std::vector<Word>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(Word w) const noexcept { return w < bitmap_.size() && bitmap_[w]; }

  /// Closed under subtraction (a subgroup of Q^n).
  bool is_additive() const noexcept { return additive_; }
  bool is_linear() const noexcept { return linear_.has_value(); }
  const LinearStructure& linear() const;
  const std::optional<LinearStructure>& linear_structure() const noexcept { return linear_; }

  /// |C| <= 1 or C = Q^n.
  bool is_trivial() const noexcept;

  friend bool operator==(const Code& a, const Code& b) noexcept {
    return a.ambient_.same_space(b.ambient_) && a.members_ == b.members_;
  }

 private:
  Code(AmbientSpace ambient, std::vector<Word> sorted_members, bool additive, std::optional<LinearStructure> linear);
  static Code from_linear(const GFMatrix& parity_check, const GFMatrix& generator_rref, std::uint64_t max_vertices);

  AmbientSpace ambient_;
  std::vector<Word> members_;
  std::vector<bool> bitmap_;
  bool additive_;
  std::optional<LinearStructure> linear_;
};

/// Every word of the span of the rows of a basis matrix, sorted.
std::vector<Word> span_words(const AmbientSpace& ambient, const GFMatrix& basis);

/// delta(C). Throws InputError for |C| = 1.
unsigned minimum_distance(const Code& c);

/// Number of words within distance r of a fixed word: sum_{i<=r} C(n,i)(q-1)^i.
BigInt sphere_size(unsigned n, unsigned q, unsigned r);

}  // namespace crc

#include "crc/hamming_space.hpp"

#include <algorithm>
#include <limits>

#include "crc/error.hpp"

namespace crc {

AmbientSpace::AmbientSpace(unsigned n, Alphabet alphabet, std::uint64_t max_vertices)
    : n_(n), alphabet_(std::move(alphabet)), max_vertices_(max_vertices), size_(1) {
  if (n == 0) throw InputError("word length must be positive");
  pow_.reserve(n);
  const std::uint64_t q = alphabet_.size();
  for (unsigned i = 0; i < n; ++i) {
    pow_.push_back(size_);
    if (size_ > (std::numeric_limits<std::uint64_t>::max() >> 1) / q)
      throw CapacityError("H(" + std::to_string(n) + "," + std::to_string(q) + ") has too many vertices to encode");
    size_ *= q;
  }
}

BigInt AmbientSpace::capacity() const {
  BigInt c = 1;
  for (unsigned i = 0; i < n_; ++i) c *= q();
  return c;
}

std::uint64_t AmbientSpace::vertex_count() const {
  if (!materializable())
    throw CapacityError("H(" + std::to_string(n_) + "," + std::to_string(q()) + ") has " + std::to_string(size_) +
                        " vertices, above the cap of " + std::to_string(max_vertices_));
  return size_;
}

Word AmbientSpace::encode(std::span<const Symbol> symbols) const {
  if (symbols.size() != n_) throw InputError("word has length " + std::to_string(symbols.size()) + ", expected " +
                                             std::to_string(n_));
  Word w = 0;
  for (unsigned i = 0; i < n_; ++i) {
    if (symbols[i] >= q()) throw InputError("symbol " + std::to_string(symbols[i]) + " out of range");
    w += static_cast<Word>(symbols[i]) * pow_[i];
  }
  return w;
}

std::vector<Symbol> AmbientSpace::decode(Word w) const {
  std::vector<Symbol> out(n_);
  for (unsigned i = 0; i < n_; ++i) {
    out[i] = static_cast<Symbol>(w % q());
    w /= q();
  }
  return out;
}

std::string AmbientSpace::to_string(Word w) const {
  std::string s;
  for (Symbol d : decode(w)) {
    if (!s.empty() && q() > 10) s += ',';
    s += std::to_string(d);
  }
  return s;
}

Word AmbientSpace::add(Word a, Word b) const noexcept {
  if (q() == 2) return a ^ b;
  Word out = 0;
  for (unsigned i = 0; i < n_; ++i) {
    out += static_cast<Word>(alphabet_.add(static_cast<Symbol>(a % q()), static_cast<Symbol>(b % q()))) * pow_[i];
    a /= q();
    b /= q();
  }
  return out;
}

Word AmbientSpace::sub(Word a, Word b) const noexcept {
  if (q() == 2) return a ^ b;
  Word out = 0;
  for (unsigned i = 0; i < n_; ++i) {
    out += static_cast<Word>(alphabet_.sub(static_cast<Symbol>(a % q()), static_cast<Symbol>(b % q()))) * pow_[i];
    a /= q();
    b /= q();
  }
  return out;
}

Word AmbientSpace::scale(Symbol lambda, Word a) const {
  Word out = 0;
  for (unsigned i = 0; i < n_; ++i) {
    out += static_cast<Word>(alphabet_.mul(lambda, static_cast<Symbol>(a % q()))) * pow_[i];
    a /= q();
  }
  return out;
}

unsigned AmbientSpace::weight(Word w) const noexcept {
  if (q() == 2) return static_cast<unsigned>(__builtin_popcountll(w));
  unsigned wt = 0;
  for (unsigned i = 0; i < n_; ++i) {
    wt += (w % q()) != 0;
    w /= q();
  }
  return wt;
}

unsigned AmbientSpace::distance(Word a, Word b) const noexcept {
  if (q() == 2) return static_cast<unsigned>(__builtin_popcountll(a ^ b));
  unsigned d = 0;
  for (unsigned i = 0; i < n_; ++i) {
    d += (a % q()) != (b % q());
    a /= q();
    b /= q();
  }
  return d;
}

std::vector<Word> AmbientSpace::neighbors(Word w) const {
  std::vector<Word> out;
  out.reserve(valency());
  for_each_neighbor(w, [&](Word v) { out.push_back(v); });
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// True when `sorted` (containing 0) is a subgroup of Q^n. Grows the generated
// subgroup coset by coset and stops as soon as it outgrows the set.
bool closed_under_subtraction(const AmbientSpace& ambient, const std::vector<Word>& sorted,
                              const std::vector<bool>& bitmap) {
  if (sorted.empty() || sorted.front() != 0) return false;
  std::vector<bool> in_group(bitmap.size(), false);
  std::vector<Word> group{0};
  in_group[0] = true;
  for (Word s : sorted) {
    if (in_group[s]) continue;
    const std::size_t base = group.size();
    Word shift = s;
    while (!in_group[shift]) {
      for (std::size_t i = 0; i < base; ++i) {
        const Word g = ambient.add(group[i], shift);
        if (!bitmap[g]) return false;
        in_group[g] = true;
        group.push_back(g);
      }
      shift = ambient.add(shift, s);
    }
    if (group.size() > sorted.size()) return false;
  }
  return group.size() == sorted.size();
}

}  // namespace

Code::Code(AmbientSpace ambient, std::vector<Word> sorted_members, bool additive,
           std::optional<LinearStructure> linear)
    : ambient_(std::move(ambient)),
      members_(std::move(sorted_members)),
      bitmap_(ambient_.vertex_count(), false),
      additive_(additive),
      linear_(std::move(linear)) {
  for (Word w : members_) bitmap_[w] = true;
}

Code Code::from_words(AmbientSpace ambient, std::vector<Word> words, bool declared_additive) {
  if (words.empty()) throw InputError("a code must be nonempty");
  const std::uint64_t count = ambient.vertex_count();
  std::sort(words.begin(), words.end());
  if (std::adjacent_find(words.begin(), words.end()) != words.end()) throw InputError("code contains duplicate words");
  if (words.back() >= count) throw InputError("word encoding out of range");

  std::vector<bool> bitmap(count, false);
  for (Word w : words) bitmap[w] = true;
  const bool additive = closed_under_subtraction(ambient, words, bitmap);
  if (declared_additive && !additive) throw InputError("declared-additive word set is not closed under subtraction");

  std::optional<LinearStructure> linear;
  const Alphabet& f = ambient.alphabet();
  if (additive && f.is_field()) {
    bool scalar_closed = true;
    for (Symbol lambda = 2; lambda < f.size() && scalar_closed; ++lambda)
      for (Word w : words)
        if (!bitmap[ambient.scale(lambda, w)]) {
          scalar_closed = false;
          break;
        }
    if (scalar_closed) {
      std::vector<std::vector<Symbol>> rows;
      rows.reserve(words.size());
      for (Word w : words) rows.push_back(ambient.decode(w));
      RrefResult r = rref(GFMatrix::from_rows(f, rows));
      GFMatrix generator = r.reduced.select_rows(r.rank);
      GFMatrix parity(f, ambient.length(), ambient.length());
      if (generator.rows() == 0) {
        for (unsigned i = 0; i < ambient.length(); ++i) parity(i, i) = 1;
      } else {
        parity = nullspace_basis(generator);
        if (parity.rows() == 0) parity = GFMatrix(f, 1, ambient.length());  // C = Q^n: one zero check
      }
      linear = LinearStructure{std::move(parity), std::move(generator)};
    }
  }
  return Code(std::move(ambient), std::move(words), additive, std::move(linear));
}

Code Code::from_symbol_rows(AmbientSpace ambient, const std::vector<std::vector<Symbol>>& rows,
                            bool declared_additive) {
  std::vector<Word> words;
  words.reserve(rows.size());
  for (const auto& r : rows) words.push_back(ambient.encode(r));
  return from_words(std::move(ambient), std::move(words), declared_additive);
}

std::vector<Word> span_words(const AmbientSpace& ambient, const GFMatrix& basis) {
  const Alphabet& f = ambient.alphabet();
  const std::size_t k = basis.rows();
  // scaled[i][lambda] = encoding of lambda * row i
  std::vector<std::vector<Word>> scaled(k, std::vector<Word>(f.size(), 0));
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Symbol> row(basis.row(i).begin(), basis.row(i).end());
    for (Symbol lambda = 0; lambda < f.size(); ++lambda) {
      std::vector<Symbol> v(row.size());
      for (std::size_t c = 0; c < row.size(); ++c) v[c] = f.mul(lambda, row[c]);
      scaled[i][lambda] = ambient.encode(v);
    }
  }
  std::vector<Word> words{0};
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t base = words.size();
    words.reserve(base * f.size());
    for (Symbol lambda = 1; lambda < f.size(); ++lambda)
      for (std::size_t j = 0; j < base; ++j) words.push_back(ambient.add(words[j], scaled[i][lambda]));
  }
  std::sort(words.begin(), words.end());
  return words;
}

Code Code::from_linear(const GFMatrix& parity_check, const GFMatrix& generator_rref, std::uint64_t max_vertices) {
  AmbientSpace ambient(static_cast<unsigned>(generator_rref.cols()), generator_rref.alphabet(), max_vertices);
  ambient.vertex_count();
  std::vector<Word> words = span_words(ambient, generator_rref);
  return Code(std::move(ambient), std::move(words), true, LinearStructure{parity_check, generator_rref});
}

Code Code::from_parity_check(const GFMatrix& h, std::uint64_t max_vertices) {
  h.alphabet().require_field("parity-check construction");
  if (h.cols() == 0) throw InputError("parity-check matrix has no columns");
  AmbientSpace(static_cast<unsigned>(h.cols()), h.alphabet(), max_vertices).vertex_count();
  GFMatrix basis = nullspace_basis(h);
  GFMatrix generator = rref(basis).reduced;
  return from_linear(h, generator, max_vertices);
}

Code Code::from_generators(const GFMatrix& g, std::uint64_t max_vertices) {
  g.alphabet().require_field("generator construction");
  if (g.cols() == 0) throw InputError("generator matrix has no columns");
  AmbientSpace(static_cast<unsigned>(g.cols()), g.alphabet(), max_vertices).vertex_count();
  RrefResult r = rref(g);
  GFMatrix generator = r.reduced.select_rows(r.rank);
  GFMatrix parity = nullspace_basis(generator);
  if (parity.rows() == 0) parity = GFMatrix(g.alphabet(), 1, g.cols());  // C = Q^n: one zero check
  return from_linear(parity, generator, max_vertices);
}

const LinearStructure& Code::linear() const {
  if (!linear_) throw InputError("code has no linear structure");
  return *linear_;
}

bool Code::is_trivial() const noexcept {
  return members_.size() <= 1 || members_.size() == ambient_.encoding_range();
}

unsigned minimum_distance(const Code& c) {
  if (c.size() < 2) throw InputError("minimum distance is undefined for a code with one word");
  const AmbientSpace& a = c.ambient();
  unsigned best = a.length();
  if (c.is_additive()) {
    for (Word w : c.members())
      if (w != 0) best = std::min(best, a.weight(w));
    return best;
  }
  const auto& m = c.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) best = std::min(best, a.distance(m[i], m[j]));
  return best;
}

BigInt sphere_size(unsigned n, unsigned q, unsigned r) {
  BigInt total = 0;
  BigInt binom = 1;
  BigInt power = 1;
  for (unsigned i = 0; i <= std::min(r, n); ++i) {
    total += binom * power;
    binom = binom * (n - i) / (i + 1);
    power *= (q - 1);
  }
  return total;
}

}  // namespace crc

#pragma once

// Vertex partitions of H(n,q), coset partitions, quotient and coset graphs,
// distance-regularity certificates and intersection arrays.

#include <optional>
#include <string>
#include <vector>

#include "crc/cr_analysis.hpp"
#include "crc/graph.hpp"

namespace crc {

inline constexpr std::size_t kMaxQuotientClasses = std::size_t{1} << 16;

/// Classes are numbered in increasing order of their smallest member.
class VertexPartition {
 public:
  /// `class_of[x]` is any class label; labels are renumbered by smallest member.
  static VertexPartition from_class_map(AmbientSpace ambient, std::vector<std::uint32_t> class_of);
  /// Throws InputError unless the classes are nonempty, disjoint and cover Q^n.
  static VertexPartition from_classes(AmbientSpace ambient, const std::vector<std::vector<Word>>& classes);

  const AmbientSpace& ambient() const noexcept { return ambient_; }
  std::size_t class_count() const noexcept { return representatives_.size(); }
  std::uint32_t class_of(Word x) const noexcept { return class_of_[x]; }
  const std::vector<std::uint32_t>& class_map() const noexcept { return class_of_; }
  /// Smallest member of each class.
  const std::vector<Word>& representatives() const noexcept { return representatives_; }
  std::vector<std::vector<Word>> classes() const;
  std::vector<Word> members(std::uint32_t cls) const;
  /// Set by coset_partition.
  bool is_coset_partition() const noexcept { return coset_; }

 private:
  VertexPartition(AmbientSpace ambient, std::vector<std::uint32_t> class_of, std::vector<Word> reps, bool coset);
  friend VertexPartition coset_partition(const Code& c);

  AmbientSpace ambient_;
  std::vector<std::uint32_t> class_of_;
  std::vector<Word> representatives_;
  bool coset_ = false;
};

/// Delta(C) = {C + x}. Throws InputError unless C is additive.
VertexPartition coset_partition(const Code& c);

struct CrPartitionCertificate {
  bool completely_regular = false;
  std::optional<IntersectionNumbers> numbers;  // shared numbers when CR
  /// A class that is not completely regular, with its witness.
  std::optional<std::uint32_t> failing_class;
  std::optional<CrWitness> class_witness;
  /// Two CR classes whose numbers differ.
  std::optional<std::pair<std::uint32_t, std::uint32_t>> mismatched_classes;
  bool used_translation_shortcut = false;
};

/// Every class CR with the same intersection numbers. With the shortcut (coset
/// partitions only) class 0 is certified and the others follow by translation.
CrPartitionCertificate certify_cr_partition(const VertexPartition& p, bool translation_shortcut = false);

/// Classes adjacent when some edge of H(n,q) joins them. At most kMaxQuotientClasses classes.
Graph quotient_graph(const VertexPartition& p);

/// Cayley graph on syndromes of a linear code.
struct CosetGraph {
  Graph graph;
  unsigned redundancy = 0;  // rank of the parity check, r
  /// Rows of the reduced parity check used to compute syndromes.
  GFMatrix reduced_parity_check;
};

/// Vertices are the q^r syndromes (base-q encoding, row i of the reduced check is digit i);
/// s ~ s' iff s' - s = lambda h_j for a column h_j and a nonzero scalar lambda.
/// Vertex labels are the syndrome strings.
CosetGraph coset_graph_by_syndrome(const Code& c);

/// Syndrome vertex of word x for the reduced check.
std::uint64_t syndrome_of(const CosetGraph& g, const AmbientSpace& ambient, Word x);

/// coset index of Delta(C) -> syndrome vertex; an isomorphism quotient_graph -> coset graph.
std::vector<Vertex> coset_to_syndrome(const CosetGraph& g, const VertexPartition& cosets);

/// {b_0..b_{D-1}; c_1..c_D}.
struct IntersectionArray {
  std::vector<unsigned> b;
  std::vector<unsigned> c;

  unsigned diameter() const noexcept { return static_cast<unsigned>(c.size()); }
  unsigned valency() const noexcept { return b.empty() ? 0 : b[0]; }
  /// a_i = k - b_i - c_i with b_D = c_0 = 0.
  std::vector<unsigned> a() const;
  /// "{6,5,4;1,2,6}"
  std::string to_string() const;

  friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;
};

struct DrgWitness {
  Vertex reference_root;
  Vertex reference_vertex;
  Vertex root;
  Vertex vertex;
  unsigned distance;
  char direction;  // 'b' or 'c'
  unsigned expected;
  unsigned observed;
};

struct DrgCertificate {
  bool distance_regular = false;
  std::optional<IntersectionArray> array;
  std::optional<DrgWitness> witness;
};

/// BFS from every root. Throws InputError for a disconnected graph.
DrgCertificate certify_distance_regular(const Graph& g);

/// b_i = beta_i / gamma_1, c_i = gamma_i / gamma_1; InputError when a division
/// is inexact or a_i = (alpha_i - alpha_0)/gamma_1 is not a nonnegative integer.
IntersectionArray predicted_quotient_array(const IntersectionNumbers& numbers);

/// Integer eigenvalues of the intersection matrix, decreasing. UnsupportedOperation
/// when fewer than D+1 integer roots lie in [-k, k].
std::vector<std::int64_t> drg_spectrum(const IntersectionArray& array);

}  // namespace crc

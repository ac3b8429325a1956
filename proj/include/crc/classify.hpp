#pragma once

// Fixture graphs, quotient-family recognition, and the structure theorems for
// coset graphs of additive and linear completely regular codes.

#include <optional>
#include <string>
#include <vector>

#include "crc/constructions.hpp"
#include "crc/isomorphism.hpp"
#include "crc/partitions.hpp"

namespace crc {

// ---- fixtures -------------------------------------------------------------

inline constexpr std::size_t kMaxFixtureVertices = std::size_t{1} << 16;

/// H(m, q); vertex = base-q encoding of the word.
Graph hamming_graph(unsigned m, unsigned q);
/// Antipodal quotient of the n-cube (n >= 2); vertex x < 2^(n-1) stands for {x, ~x}.
Graph folded_cube(unsigned n);
/// Cayley graph on Z_4^2 with connection set {+-(1,0), +-(0,1), +-(1,1)}; vertex a + 4b.
Graph shrikhande_graph();
/// Product of `shrikhande` copies of the Shrikhande graph and `cliques` copies of K4 (shrikhande >= 1).
Graph doob_graph(unsigned shrikhande, unsigned cliques);
Graph complete_graph(unsigned v);
/// K_{v,v}; the parts are {0..v-1} and {v..2v-1}.
Graph complete_bipartite_graph(unsigned v);

enum class FixtureKind { hamming, folded_cube, shrikhande, doob, complete, complete_bipartite };

/// Memoized fixture; thread-safe. Parameters: hamming (m, q), folded_cube (n),
/// doob (shrikhande, cliques), complete (v), complete_bipartite (v). CapacityError when too large.
const Graph& construct_fixture(FixtureKind kind, unsigned p1 = 0, unsigned p2 = 0);

// ---- recognition ----------------------------------------------------------

enum class FamilyTag { hamming, doob, folded_cube, ia654_non_folded, complete_graph, complete_bipartite, other };
const char* to_string(FamilyTag t) noexcept;

struct QuotientFamily {
  FamilyTag tag = FamilyTag::other;
  /// hamming {m, q'}, doob {shrikhande, cliques}, folded_cube {n}, complete_graph {v},
  /// complete_bipartite {v}; empty otherwise.
  std::vector<unsigned> params;
  IntersectionArray array;
  /// Isomorphism onto the fixture of the same name when one was computed.
  std::optional<std::vector<Vertex>> isomorphism;

  /// "Hamming(2,8)", "FoldedCube(6)", "Other", ...
  std::string name() const;
};

/// Intersection arrays of the parametric families.
IntersectionArray hamming_array(unsigned m, unsigned q);
IntersectionArray folded_cube_array(unsigned n);
/// True for the folded n-cube array with n >= 4 (diameter >= 2).
bool is_folded_cube_array(const IntersectionArray& a);

/// Throws InputError unless g is connected and distance-regular.
QuotientFamily classify_quotient(const Graph& g);

// ---- theorem checks -------------------------------------------------------

enum class CheckStatus { pass, fail, inapplicable };
const char* to_string(CheckStatus s) noexcept;

struct TheoremCheck {
  std::string name;
  CheckStatus status = CheckStatus::inapplicable;
  std::string detail;
};

/// Clique-based restrictions on quotients whose classes all have minimum distance >= 2.
/// `min_class_distance` is nullopt when every class is a single vertex.
std::vector<TheoremCheck> check_clique_restrictions(const QuotientFamily& family, const Graph& quotient, unsigned q,
                                         std::optional<unsigned> min_class_distance, bool coset_partition);

/// Smallest minimum distance over the classes (nullopt when all classes are singletons).
std::optional<unsigned> min_class_distance(const VertexPartition& p);

// ---- coordinate structure -------------------------------------------------

/// Classes of i ~ j iff e_i - e_j in C, each sorted, ordered by smallest coordinate.
struct CoordinateRelation {
  std::vector<std::vector<unsigned>> classes;
  /// With an expected block count m: whether there are m classes of size n/m.
  std::optional<bool> matches_blocks;
};
CoordinateRelation coordinate_classes(const Code& c, std::optional<unsigned> expected_blocks = std::nullopt);

struct ProductDecomposition {
  QuotientFamily quotient;
  std::vector<std::vector<unsigned>> blocks;  // coordinates of each factor, increasing
  std::vector<Code> factors;                  // C restricted to each block
  std::vector<IntersectionNumbers> factor_numbers;
};

/// Splits an additive CR code with delta >= 2 and a Hamming coset graph H(m,q')
/// into m covering-radius-1 factors on coordinate blocks. InputError when the
/// hypotheses fail; TheoremViolation when a verification step fails.
ProductDecomposition decompose_product(const Code& c);

/// Parallel-column classes of a parity check.
struct ColumnClasses {
  std::vector<std::vector<unsigned>> classes;   // ordered by smallest column
  std::vector<unsigned> representatives;        // P: smallest column of each class
  std::vector<Symbol> scale;                    // h_j = scale[j] * normalized column of its class
  bool uniform = false;
  std::optional<unsigned> gamma1;               // of the code, when certified
  bool matches_gamma1 = false;
  GFMatrix deduplicated_check{Alphabet::construct(2), 0, 0};  // normalized columns of P, rank rows only
  std::optional<Code> shortened;                // D: nullspace of the deduplicated check
  std::optional<unsigned> shortened_distance;   // nullopt when D = {0}
};

/// For a non-trivial reduced linear CR code. InputError when a hypothesis fails.
ColumnClasses column_classes(const Code& c);

/// Columns of a full-rank check are every point of PG(r-1, q) exactly once (r >= 1).
bool is_hamming_check(const GFMatrix& h);
/// Binary full-rank check with 2^(r-1) distinct columns on an affine hyperplane off 0 (rank r >= 3).
bool is_extended_hamming_check(const GFMatrix& h);

/// Equivalence of two codes under coordinate permutations and per-coordinate symbol
/// permutations (coloured-graph isomorphism). nullopt when the test exceeds capacity.
std::optional<bool> codes_equivalent(const Code& a, const Code& b);

enum class Rho12Case { hamming, product_of_hamming, extended_hamming, undecided, none };
const char* to_string(Rho12Case c) noexcept;

struct Rho12Result {
  Rho12Case kind = Rho12Case::none;
  std::string detail;
};

/// Linear CR code with delta >= 3, arithmetic spectrum and rho in {1, 2}.
Rho12Result classify_rho12(const Code& c);

struct StructureCase {
  char label;            // 'a'..'d'
  unsigned gamma1 = 0;
  std::string normal_form;
  bool verified = false;
};

struct StructureReport {
  ColumnClasses columns;
  QuotientFamily quotient;
  std::vector<StructureCase> cases;
  std::string caveat;
};

/// Every matching case of the structure theorem for non-trivial reduced linear CR codes
/// with arithmetic spectrum. Each case's normal form is checked by mapping C onto it.
StructureReport arithmetic_structure_cases(const Code& c);

struct HammingQuotientReport {
  QuotientFamily quotient;
  unsigned t = 0;
  std::vector<std::int64_t> derived_spectrum;
  std::vector<unsigned> stripped_coordinates;
  StructureReport structure;
  std::vector<char> cases;  // corollary labels 'a'..'c'
};

/// For a linear CR code whose coset graph is Hamming: t = gamma_1 q'/q, the derived
/// spectrum, and the corollary cases of the reduced code.
HammingQuotientReport hamming_coset_graph_cases(const Code& c);

}  // namespace crc

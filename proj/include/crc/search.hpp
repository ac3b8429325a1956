#pragma once

// Exhaustive census of small linear codes up to monomial equivalence, with
// per-record theorem checks, persistence and replay.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "crc/reports.hpp"

namespace crc {

enum class MatrixSide { parity_check, generator };
const char* to_string(MatrixSide s) noexcept;

/// One monomial-equivalence class of [n, n-r] codes.
struct EnumeratedCode {
  unsigned redundancy = 0;
  MatrixSide side = MatrixSide::parity_check;
  /// Canonical s x n matrix, s = min(r, n - r); its columns are normalized points.
  GFMatrix matrix;
  Code code;
};

/// Nonzero normalized vectors of GF(q)^s plus the zero vector, in lexicographic order.
std::vector<std::vector<Symbol>> projective_points_with_zero(const Alphabet& field, unsigned s);

/// Redundancies 1..min(max_redundancy, n-1); within each, canonical column
/// multisets in lexicographic order. A multiset is canonical when no element of
/// GL(s) maps it to a lexicographically smaller multiset.
void for_each_linear_code(unsigned n, unsigned q, unsigned max_redundancy,
                          const std::function<void(EnumeratedCode&&)>& sink,
                          std::uint64_t max_vertices = kDefaultMaxVertices);
std::vector<EnumeratedCode> enumerate_linear_codes(unsigned n, unsigned q, unsigned max_redundancy,
                                                   std::uint64_t max_vertices = kDefaultMaxVertices);

/// Builds the census record of one code: identity, CR data, quotient family,
/// theorem checks, observations and a SHA-256 digest of everything else.
Json census_record(const EnumeratedCode& e);
Json census_record(const Code& code, unsigned redundancy, MatrixSide side, const GFMatrix& matrix);

/// Hex SHA-256 of the compact dump of `record` without its "digest" key.
std::string record_digest(const Json& record);
/// Names of the failed checks of a record.
std::vector<std::string> failed_checks(const Json& record);

struct CensusParams {
  unsigned q = 2;
  unsigned min_length = 1;
  unsigned max_length = 7;
  unsigned max_redundancy = ~0u;
  std::uint64_t max_vertices = kDefaultMaxVertices;
  std::string out_dir;  // census.jsonl, summary.csv, summary.json, witness.json on failure
};

struct CensusSummary {
  std::uint64_t enumerated = 0;
  std::uint64_t cr_records = 0;
  std::uint64_t non_cr_records = 0;
  std::uint64_t pass = 0, fail = 0, inapplicable = 0;
  std::optional<std::int64_t> question_min_slack;
  std::uint64_t doob_quotients = 0;
  std::vector<std::pair<std::string, std::uint64_t>> rho12_outcomes;
  std::optional<Json> failing_record;
  /// (n, q, rho, family, arithmetic) -> count, ordered.
  std::vector<std::pair<std::vector<std::string>, std::uint64_t>> groups;

  Json to_json() const;
  std::string to_csv() const;
};

/// Stops at the first record with a failed check and writes witness.json.
CensusSummary run_census(const CensusParams& params);

struct ReplayResult {
  bool identical = false;
  std::vector<std::string> differing_keys;
  /// For non-CR records: the recount of the witness pair disagrees, as recorded.
  std::optional<bool> witness_confirmed;
  Json recomputed;
};

/// Accepts a census record or a witness file ({"record": ...}). InputError on a digest mismatch.
ReplayResult replay(const Json& record_or_witness, std::uint64_t max_vertices = kDefaultMaxVertices);

}  // namespace crc

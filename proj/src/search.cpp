#include "crc/search.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>

#include "crc/error.hpp"

namespace crc {

const char* to_string(MatrixSide s) noexcept { return s == MatrixSide::parity_check ? "parity_check" : "generator"; }

std::vector<std::vector<Symbol>> projective_points_with_zero(const Alphabet& field, unsigned s) {
  field.require_field("projective points");
  const unsigned q = field.size();
  std::vector<std::vector<Symbol>> out;
  std::vector<Symbol> v(s, 0);
  out.push_back(v);
  std::uint64_t total = 1;
  for (unsigned i = 0; i < s; ++i) total *= q;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t x = code;
    for (unsigned i = s; i-- > 0;) {
      v[i] = static_cast<Symbol>(x % q);
      x /= q;
    }
    const auto first = std::find_if(v.begin(), v.end(), [](Symbol y) { return y != 0; });
    if (first != v.end() && *first == 1) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

constexpr std::uint64_t kMaxGroupCandidates = std::uint64_t{1} << 22;

std::vector<GFMatrix> general_linear_group(const Alphabet& f, unsigned s) {
  const unsigned q = f.size();
  std::uint64_t total = 1;
  for (unsigned i = 0; i < s * s; ++i) {
    total *= q;
    if (total > kMaxGroupCandidates) throw CapacityError("GL(" + std::to_string(s) + "," + std::to_string(q) + ") is too large to enumerate");
  }
  std::vector<GFMatrix> out;
  for (std::uint64_t code = 0; code < total; ++code) {
    GFMatrix a(f, s, s);
    std::uint64_t x = code;
    for (unsigned i = 0; i < s; ++i)
      for (unsigned j = 0; j < s; ++j) {
        a(i, j) = static_cast<Symbol>(x % q);
        x /= q;
      }
    if (rank(a) == s) out.push_back(std::move(a));
  }
  return out;
}

class MultisetEnumerator {
 public:
  MultisetEnumerator(const Alphabet& f, unsigned s, unsigned n) : f_(f), s_(s), n_(n) {
    points_ = projective_points_with_zero(f, s);
    std::map<std::vector<Symbol>, std::uint32_t> index;
    for (std::uint32_t i = 0; i < points_.size(); ++i) index.emplace(points_[i], i);
    for (const GFMatrix& a : general_linear_group(f, s)) {
      std::vector<std::uint32_t> perm(points_.size());
      for (std::uint32_t p = 0; p < points_.size(); ++p) {
        auto image = multiply(a, points_[p]);
        normalize_projectively(f, image);
        perm[p] = index.at(image);
      }
      actions_.push_back(std::move(perm));
    }
  }

  template <class F>
  void run(F&& emit) {
    std::vector<std::uint32_t> current(n_, 0);
    if (points_.size() == 1) return;
    while (true) {
      if (full_rank(current) && canonical(current)) emit(matrix_of(current));
      // next nondecreasing sequence
      std::size_t i = n_;
      while (i > 0 && current[i - 1] == points_.size() - 1) --i;
      if (i == 0) return;
      const std::uint32_t v = current[i - 1] + 1;
      for (std::size_t j = i - 1; j < n_; ++j) current[j] = v;
    }
  }

 private:
  bool full_rank(const std::vector<std::uint32_t>& ms) const { return rank(matrix_of(ms)) == s_; }

  bool canonical(const std::vector<std::uint32_t>& ms) const {
    std::vector<std::uint32_t> image(n_);
    for (const auto& perm : actions_) {
      for (std::size_t i = 0; i < n_; ++i) image[i] = perm[ms[i]];
      std::sort(image.begin(), image.end());
      if (image < ms) return false;
    }
    return true;
  }

  GFMatrix matrix_of(const std::vector<std::uint32_t>& ms) const {
    GFMatrix m(f_, s_, n_);
    for (std::size_t j = 0; j < n_; ++j)
      for (unsigned i = 0; i < s_; ++i) m(i, j) = points_[ms[j]][i];
    return m;
  }

  Alphabet f_;
  unsigned s_, n_;
  std::vector<std::vector<Symbol>> points_;
  std::vector<std::vector<std::uint32_t>> actions_;
};

}  // namespace

void for_each_linear_code(unsigned n, unsigned q, unsigned max_redundancy,
                          const std::function<void(EnumeratedCode&&)>& sink, std::uint64_t max_vertices) {
  if (n == 0) throw InputError("census lengths start at 1");
  const Alphabet f = Alphabet::construct(q);
  if (!f.is_field()) throw InputError("the census needs a prime power q, got " + std::to_string(q));
  AmbientSpace(n, f, max_vertices).vertex_count();
  const unsigned top = std::min(max_redundancy, n - 1);
  for (unsigned r = 1; r <= top; ++r) {
    const unsigned k = n - r;
    const MatrixSide side = r <= k ? MatrixSide::parity_check : MatrixSide::generator;
    MultisetEnumerator en(f, std::min(r, k), n);
    en.run([&](GFMatrix m) {
      Code code = side == MatrixSide::parity_check ? Code::from_parity_check(m, max_vertices)
                                                   : Code::from_generators(m, max_vertices);
      sink(EnumeratedCode{r, side, std::move(m), std::move(code)});
    });
  }
}

std::vector<EnumeratedCode> enumerate_linear_codes(unsigned n, unsigned q, unsigned max_redundancy,
                                                   std::uint64_t max_vertices) {
  std::vector<EnumeratedCode> out;
  for_each_linear_code(n, q, max_redundancy, [&](EnumeratedCode&& e) { out.push_back(std::move(e)); },
                       max_vertices);
  return out;
}

// ---- records --------------------------------------------------------------

std::string record_digest(const Json& record) {
  Json body = record;
  body.erase("digest");
  const std::string text = body.dump();
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  std::string hex;
  char buf[3];
  for (unsigned i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

namespace {

TheoremCheck verdict(std::string name, bool ok, std::string detail) {
  return {std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(detail)};
}

TheoremCheck skipped(std::string name, std::string why) {
  return {std::move(name), CheckStatus::inapplicable, std::move(why)};
}

template <class F>
TheoremCheck guarded(const std::string& name, F&& body) {
  try {
    return body();
  } catch (const TheoremViolation& e) {
    return verdict(name, false, std::string("violation: ") + e.what());
  } catch (const Error& e) {
    return verdict(name, false, std::string(to_string(e.kind())) + ": " + e.what());
  }
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return "{" + s + "}";
}

}  // namespace

Json census_record(const EnumeratedCode& e) { return census_record(e.code, e.redundancy, e.side, e.matrix); }

Json census_record(const Code& code, unsigned redundancy, MatrixSide side, const GFMatrix& matrix) {
  const unsigned q = code.q();
  Json rec;
  rec["n"] = code.length();
  rec["q"] = q;
  rec["redundancy"] = redundancy;
  rec["side"] = to_string(side);
  rec["matrix"] = matrix.to_rows();
  rec["size"] = code.size();
  const CrAnalysis an = analyze(code);
  rec["delta"] = an.minimum_distance ? Json(*an.minimum_distance) : Json();
  rec["cr"] = an.certificate.completely_regular;
  rec["rho"] = an.certificate.rho;
  const bool reduced = is_reduced(code);
  rec["reduced"] = reduced;
  if (!an.certificate.completely_regular) {
    rec["witness"] = witness_json(code.ambient(), *an.certificate.witness);
    rec["checks"] = Json::array();
    rec["digest"] = record_digest(rec);
    return rec;
  }
  const IntersectionNumbers& nums = *an.certificate.numbers;
  const unsigned rho = an.certificate.rho;
  const auto& spec = an.spectrum->eigenvalues;
  const bool arithmetic = an.arithmetic->arithmetic && !an.arithmetic->degenerate;
  rec["numbers"] = numbers_json(nums);
  rec["spectrum"] = spec;
  rec["arithmetic"] = {{"is", an.arithmetic->arithmetic}, {"t", an.arithmetic->t}};

  const Graph coset = coset_graph_by_syndrome(code).graph;
  const QuotientFamily family = classify_quotient(coset);
  rec["family"] = family.name();
  rec["array"] = array_json(family.array);

  std::vector<TheoremCheck> checks;
  checks.push_back(guarded("smallest_eigenvalue_bound", [&] {
    const auto cert = certify_cr_partition(coset_partition(code), true);
    if (!cert.completely_regular) return skipped("smallest_eigenvalue_bound", "coset partition is not completely regular");
    const std::int64_t slack = *an.bounds->smallest_eigenvalue_slack;
    return verdict("smallest_eigenvalue_bound", slack >= 0, "slack " + std::to_string(slack));
  }));
  const std::optional<unsigned> delta = an.minimum_distance;
  if (reduced)
    checks.push_back(verdict("reduced_linear_min_distance_two", delta && *delta >= 2,
                             "delta " + (delta ? std::to_string(*delta) : std::string("none"))));
  else
    checks.push_back(skipped("reduced_linear_min_distance_two", "not reduced"));
  if (reduced)
    checks.push_back(guarded("parallel_column_classes_uniform", [&] {
      const ColumnClasses cols = column_classes(code);
      std::string detail = std::to_string(cols.classes.size()) + " classes, gamma_1 " + std::to_string(*cols.gamma1);
      bool ok = cols.matches_gamma1;
      if (cols.shortened_distance) {
        detail += ", delta(D) " + std::to_string(*cols.shortened_distance);
        ok = ok && *cols.shortened_distance >= 3;
      }
      return verdict("parallel_column_classes_uniform", ok, detail);
    }));
  else
    checks.push_back(skipped("parallel_column_classes_uniform", "not reduced"));
  for (auto& c : check_clique_restrictions(family, coset, q, delta, true)) checks.push_back(std::move(c));
  checks.push_back(verdict("linear_quotient_not_doob", family.tag != FamilyTag::doob, family.name()));
  if (arithmetic && rho >= 3) {
    const bool listed = family.tag == FamilyTag::hamming || family.tag == FamilyTag::doob ||
                        family.tag == FamilyTag::folded_cube || family.tag == FamilyTag::ia654_non_folded;
    checks.push_back(verdict("arithmetic_quotient_family", listed && family.array.diameter() == rho, family.name()));
  } else {
    checks.push_back(skipped("arithmetic_quotient_family", arithmetic ? "rho < 3" : "spectrum not arithmetic"));
  }
  std::vector<std::string> cases;
  if (reduced && arithmetic) {
    checks.push_back(guarded("arithmetic_reduced_linear_case", [&] {
      const StructureReport s = arithmetic_structure_cases(code);
      bool any = false;
      for (const auto& k : s.cases) {
        cases.push_back(std::string(1, k.label) + (k.verified ? "" : "?"));
        any = any || k.verified;
      }
      std::string detail = "cases ";
      for (const auto& c : cases) detail += c;
      if (!s.caveat.empty()) detail += "; " + s.caveat;
      if (!any && !s.cases.empty()) return skipped("arithmetic_reduced_linear_case", detail);
      return verdict("arithmetic_reduced_linear_case", any, detail);
    }));
  } else {
    checks.push_back(skipped("arithmetic_reduced_linear_case", reduced ? "spectrum not arithmetic" : "not reduced"));
  }
  checks.push_back(guarded("predicted_array_matches_quotient", [&] {
    const IntersectionArray predicted = predicted_quotient_array(nums);
    if (!(predicted == family.array))
      return verdict("predicted_array_matches_quotient", false,
                     "predicted " + predicted.to_string() + ", observed " + family.array.to_string());
    std::vector<std::int64_t> scaled;
    const std::int64_t alpha0 = nums.alpha[0], gamma1 = nums.gamma[1];
    for (std::int64_t theta : spec) scaled.push_back((theta - alpha0) / gamma1);
    const auto quotient_spec = drg_spectrum(family.array);
    return verdict("predicted_array_matches_quotient", quotient_spec == scaled,
                   predicted.to_string() + ", quotient spectrum " + join(quotient_spec));
  }));
  if (family.tag == FamilyTag::hamming && reduce_code(code).code.is_trivial()) {
    checks.push_back(skipped("hamming_quotient_corollary", "reduces to a trivial code"));
  } else if (family.tag == FamilyTag::hamming) {
    checks.push_back(guarded("hamming_quotient_corollary", [&] {
      const HammingQuotientReport r = hamming_coset_graph_cases(code);
      std::string detail = "t " + std::to_string(r.t) + ", cases " + std::string(r.cases.begin(), r.cases.end());
      return verdict("hamming_quotient_corollary", !arithmetic || r.t == an.arithmetic->t, detail);
    }));
  } else {
    checks.push_back(skipped("hamming_quotient_corollary", "quotient is " + family.name()));
  }
  rec["checks"] = checks_json(checks);

  Json obs;
  obs["question_slack"] = an.bounds->smallest_eigenvalue_slack ? Json(*an.bounds->smallest_eigenvalue_slack) : Json();
  obs["structure_cases"] = cases;
  if (arithmetic && (rho == 1 || rho == 2) && delta && *delta >= 3) {
    try {
      obs["rho12"] = to_string(classify_rho12(code).kind);
    } catch (const Error& e) {
      obs["rho12"] = std::string("error: ") + e.what();
    }
  }
  rec["observations"] = std::move(obs);
  rec["digest"] = record_digest(rec);
  return rec;
}

std::vector<std::string> failed_checks(const Json& record) {
  std::vector<std::string> out;
  if (!record.contains("checks")) return out;
  for (const auto& c : record["checks"])
    if (c["status"] == "FAIL") out.push_back(c["name"].get<std::string>());
  return out;
}

// ---- census ---------------------------------------------------------------

Json CensusSummary::to_json() const {
  Json j;
  j["enumerated"] = enumerated;
  j["cr_records"] = cr_records;
  j["non_cr_records"] = non_cr_records;
  j["checks"] = {{"PASS", pass}, {"FAIL", fail}, {"INAPPLICABLE", inapplicable}};
  j["question_scan"] = {{"min_slack", question_min_slack ? Json(*question_min_slack) : Json()},
                        {"counterexample_found", question_min_slack && *question_min_slack < 0}};
  j["doob_quotients"] = doob_quotients;
  Json r12 = Json::object();
  for (const auto& [k, v] : rho12_outcomes) r12[k] = v;
  j["rho12_outcomes"] = std::move(r12);
  j["failed"] = failing_record.has_value();
  return j;
}

std::string CensusSummary::to_csv() const {
  std::string out = "n,q,rho,family,arithmetic,count\n";
  for (const auto& [key, count] : groups) {
    for (const auto& k : key) out += k + ",";
    out += std::to_string(count) + "\n";
  }
  return out;
}

namespace {

void bump(std::vector<std::pair<std::string, std::uint64_t>>& v, const std::string& key) {
  auto it = std::find_if(v.begin(), v.end(), [&](const auto& p) { return p.first == key; });
  if (it == v.end())
    v.emplace_back(key, 1);
  else
    ++it->second;
}

}  // namespace

CensusSummary run_census(const CensusParams& params) {
  if (params.min_length == 0 || params.min_length > params.max_length) throw InputError("invalid census length range");
  namespace fs = std::filesystem;
  std::ofstream jsonl;
  if (!params.out_dir.empty()) {
    fs::create_directories(params.out_dir);
    jsonl.open(fs::path(params.out_dir) / "census.jsonl");
    if (!jsonl) throw InputError("cannot write census.jsonl in " + params.out_dir);
  }
  CensusSummary summary;
  std::map<std::vector<std::string>, std::uint64_t> groups;
  auto group_key = [](const Json& rec) {
    const std::string family = rec["cr"].get<bool>() ? rec["family"].get<std::string>() : "not_cr";
    const std::string arith = rec["cr"].get<bool>() && rec["arithmetic"]["is"].get<bool>() ? "1" : "0";
    // zero-padded so the map order is numeric
    char n[8], rho[8];
    std::snprintf(n, sizeof n, "%02u", rec["n"].get<unsigned>());
    std::snprintf(rho, sizeof rho, "%02u", rec["rho"].get<unsigned>());
    return std::vector<std::string>{n, std::to_string(rec["q"].get<unsigned>()), rho, family, arith};
  };

  for (unsigned n = params.min_length; n <= params.max_length && !summary.failing_record; ++n) {
    for_each_linear_code(n, params.q, params.max_redundancy, [&](EnumeratedCode&& e) {
      if (summary.failing_record) return;
      ++summary.enumerated;
      const Json rec = census_record(e);
      if (jsonl) jsonl << rec.dump() << '\n';
      ++groups[group_key(rec)];
      if (!rec["cr"].get<bool>()) {
        ++summary.non_cr_records;
        return;
      }
      ++summary.cr_records;
      for (const auto& c : rec["checks"]) {
        const auto s = c["status"].get<std::string>();
        if (s == "PASS") ++summary.pass;
        else if (s == "FAIL") ++summary.fail;
        else ++summary.inapplicable;
      }
      const Json& slack = rec["observations"]["question_slack"];
      if (!slack.is_null())
        summary.question_min_slack = summary.question_min_slack ? std::min(*summary.question_min_slack, slack.get<std::int64_t>())
                                                                : slack.get<std::int64_t>();
      if (rec["family"].get<std::string>().rfind("Doob", 0) == 0) ++summary.doob_quotients;
      if (rec["observations"].contains("rho12")) bump(summary.rho12_outcomes, rec["observations"]["rho12"]);
      if (!failed_checks(rec).empty()) summary.failing_record = rec;
    }, params.max_vertices);
  }
  for (auto& [key, count] : groups) {
    auto k = key;
    k[0] = std::to_string(std::stoul(k[0]));
    k[2] = std::to_string(std::stoul(k[2]));
    summary.groups.emplace_back(std::move(k), count);
  }
  if (!params.out_dir.empty()) {
    std::ofstream(fs::path(params.out_dir) / "summary.csv") << summary.to_csv();
    write_json_file((fs::path(params.out_dir) / "summary.json").string(), summary.to_json());
    if (summary.failing_record) {
      Json w;
      w["failed_checks"] = failed_checks(*summary.failing_record);
      w["record"] = *summary.failing_record;
      write_json_file((fs::path(params.out_dir) / "witness.json").string(), w);
    }
  }
  return summary;
}

// ---- replay ---------------------------------------------------------------

ReplayResult replay(const Json& input, std::uint64_t max_vertices) {
  const Json& record = input.contains("record") ? input["record"] : input;
  try {
    if (!record.contains("digest") || record["digest"] != record_digest(record))
      throw InputError("digest mismatch: the record was modified after it was written");
    const unsigned q = record.at("q").get<unsigned>();
    const Alphabet f = Alphabet::construct(q);
    if (!f.is_field()) throw InputError("census records need a prime power q");
    const GFMatrix m = GFMatrix::from_rows(f, record.at("matrix").get<std::vector<std::vector<Symbol>>>());
    const auto side = record.at("side") == "parity_check" ? MatrixSide::parity_check : MatrixSide::generator;
    const Code code = side == MatrixSide::parity_check ? Code::from_parity_check(m, max_vertices)
                                                       : Code::from_generators(m, max_vertices);
    ReplayResult out;
    out.recomputed = census_record(code, record.at("redundancy").get<unsigned>(), side, m);
    for (const auto& [key, value] : record.items())
      if (!out.recomputed.contains(key) || out.recomputed[key] != value) out.differing_keys.push_back(key);
    for (const auto& [key, value] : out.recomputed.items())
      if (!record.contains(key)) out.differing_keys.push_back(key);
    out.identical = out.differing_keys.empty();
    if (!record.at("cr").get<bool>()) {
      const AmbientSpace& a = code.ambient();
      const auto& w = record.at("witness");
      auto decode = [&](const std::string& s) {
        std::vector<Symbol> digits;
        if (a.q() > 10) {
          std::size_t pos = 0;
          while (pos <= s.size()) {
            const std::size_t next = std::min(s.find(',', pos), s.size());
            digits.push_back(static_cast<Symbol>(std::stoul(s.substr(pos, next - pos))));
            pos = next + 1;
          }
        } else {
          for (char ch : s) digits.push_back(static_cast<Symbol>(ch - '0'));
        }
        if (digits.size() != a.length()) throw InputError("witness word has the wrong length");
        return a.encode(digits);
      };
      const DirectCounts x = direct_neighbor_counts(code, decode(w.at("reference").get<std::string>()));
      const DirectCounts y = direct_neighbor_counts(code, decode(w.at("vertex").get<std::string>()));
      out.witness_confirmed = x.distance_class == y.distance_class &&
                              (x.gamma != y.gamma || x.alpha != y.alpha || x.beta != y.beta);
    }
    return out;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed census record: ") + e.what());
  }
}

}  // namespace crc

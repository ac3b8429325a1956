#include "crc/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "crc/error.hpp"
#include "crc/search.hpp"

namespace crc {

namespace {

struct Options {
  std::uint64_t max_vertices = kDefaultMaxVertices;
  bool allow_large = false;
  std::string format = "json";
  std::string out;
  bool verify = false;
  std::vector<std::string> inputs;
  // construct
  std::string name;
  unsigned q = 2, r = 0, n = 0, s = 0;
  // search
  unsigned min_length = 1, max_length = 7, max_redundancy = ~0u;
};

struct Outcome {
  Json report;
  int code = kExitOk;
};

std::uint64_t vertex_cap(const Options& o) {
  if (o.max_vertices > kDefaultMaxVertices && !o.allow_large)
    throw InputError("--max-vertices above " + std::to_string(kDefaultMaxVertices) + " needs --allow-large");
  return o.max_vertices;
}

const std::string& single_input(const Options& o) {
  if (o.inputs.size() != 1) throw InputError("expected exactly one input file");
  return o.inputs.front();
}

Code load_code(const std::string& path, const Options& o) { return code_from_spec(read_json_file(path), vertex_cap(o)); }

Outcome cmd_check(const Options& o) {
  const Code c = load_code(single_input(o), o);
  const CrAnalysis an = analyze(c);
  return {cr_report(c, an), an.certificate.completely_regular ? kExitOk : kExitRefuted};
}

Outcome cmd_spectrum(const Options& o) {
  const Code c = load_code(single_input(o), o);
  const CrAnalysis an = analyze(c);
  if (!an.certificate.completely_regular) return {cr_report(c, an), kExitRefuted};
  return {spectrum_report(an), kExitOk};
}

// The partition named by the input: explicit classes, cosets of an additive
// code, or the distance partition of any other code.
struct LoadedPartition {
  VertexPartition partition;
  std::string kind;
  std::optional<Code> code;
};

LoadedPartition load_partition(const Options& o) {
  const Json spec = read_json_file(single_input(o));
  const std::uint64_t cap = vertex_cap(o);
  if (is_partition_spec(spec)) return {partition_from_spec(spec, cap), "explicit", std::nullopt};
  Code c = code_from_spec(spec, cap);
  if (c.is_additive()) return {coset_partition(c), "coset", c};
  const DistancePartition d = distance_partition(c);
  std::vector<std::uint32_t> labels(d.class_of.begin(), d.class_of.end());
  return {VertexPartition::from_class_map(c.ambient(), std::move(labels)), "distance", c};
}

Json partition_header(const LoadedPartition& lp, const CrPartitionCertificate& cert) {
  Json j;
  j["partition"] = lp.kind;
  j["classes"] = lp.partition.class_count();
  j["cr_partition"] = cert.completely_regular;
  if (cert.numbers) j["numbers"] = numbers_json(*cert.numbers);
  if (cert.failing_class) {
    j["failing_class"] = *cert.failing_class;
    j["witness"] = witness_json(lp.partition.ambient(), *cert.class_witness);
  }
  if (cert.mismatched_classes)
    j["mismatched_classes"] = {cert.mismatched_classes->first, cert.mismatched_classes->second};
  return j;
}

Outcome cmd_quotient(const Options& o) {
  const LoadedPartition lp = load_partition(o);
  const CrPartitionCertificate cert = certify_cr_partition(lp.partition);
  Json j = partition_header(lp, cert);
  const Graph g = quotient_graph(lp.partition);
  j["quotient"] = graph_json(g);
  const DrgCertificate drg = certify_distance_regular(g);
  j["drg"] = drg_json(drg);
  int code = cert.completely_regular && drg.distance_regular ? kExitOk : kExitRefuted;
  if (cert.completely_regular && cert.numbers->rho() >= 1) {
    try {
      const IntersectionArray predicted = predicted_quotient_array(*cert.numbers);
      j["predicted_array"] = array_json(predicted);
      const bool match = drg.array && predicted == *drg.array;
      j["predicted_matches"] = match;
      if (!match) code = kExitRefuted;
    } catch (const InputError& e) {
      j["predicted_array"] = nullptr;
      j["predicted_error"] = e.what();
    }
  }
  return {std::move(j), code};
}

Outcome cmd_classify(const Options& o) {
  const LoadedPartition lp = load_partition(o);
  const Graph g = quotient_graph(lp.partition);
  const DrgCertificate drg = certify_distance_regular(g);
  if (!drg.distance_regular) {
    Json j;
    j["partition"] = lp.kind;
    j["drg"] = drg_json(drg);
    return {std::move(j), kExitRefuted};
  }
  const QuotientFamily family = classify_quotient(g);
  const auto checks = check_clique_restrictions(family, g, lp.partition.ambient().q(), min_class_distance(lp.partition),
                                     lp.partition.is_coset_partition());
  Json j = family_json(family, checks);
  j["partition"] = lp.kind;
  bool failed = false;
  for (const auto& c : checks) failed = failed || c.status == CheckStatus::fail;
  return {std::move(j), failed ? kExitViolation : kExitOk};
}

Outcome cmd_product(const Options& o) {
  if (o.inputs.size() != 2) throw InputError("product needs two input files");
  const Code left = load_code(o.inputs[0], o);
  const Code right = load_code(o.inputs[1], o);
  const ProductCompatibility p = product_cr_criterion(left, right);
  Json j = product_json(p);
  int code = p.compatible ? kExitOk : kExitRefuted;
  if (o.verify) {
    const Code prod = cartesian_product(left, right);
    const CrAnalysis an = analyze(prod);
    Json v;
    v["cr"] = an.certificate.completely_regular;
    bool agrees = an.certificate.completely_regular == p.compatible;
    if (an.certificate.completely_regular) {
      v["numbers"] = numbers_json(*an.certificate.numbers);
      v["spectrum"] = an.spectrum->eigenvalues;
      agrees = agrees && p.product_numbers && *p.product_numbers == *an.certificate.numbers;
    } else {
      v["witness"] = witness_json(prod.ambient(), *an.certificate.witness);
    }
    v["agrees"] = agrees;
    j["verification"] = std::move(v);
    if (!agrees) code = kExitViolation;
  }
  return {std::move(j), code};
}

template <class F>
Json section(F&& body) {
  try {
    return body();
  } catch (const InputError& e) {
    return Json{{"inapplicable", e.what()}};
  }
}

Outcome cmd_decompose(const Options& o) {
  const Code c = load_code(single_input(o), o);
  Json j;
  j["product_decomposition"] = section([&] { return decomposition_json(decompose_product(c)); });
  j["structure"] = section([&] {
    if (!c.is_linear()) throw InputError("needs a linear code");
    const ReducedCode red = reduce_code(c);
    if (red.code.is_trivial()) throw InputError("the code reduces to a trivial code");
    Json s = structure_json(arithmetic_structure_cases(red.code));
    s["stripped_coordinates"] = red.stripped_coordinates;
    return s;
  });
  j["hamming_quotient"] = section([&] { return hamming_quotient_json(hamming_coset_graph_cases(c)); });
  j["rho12"] = section([&] {
    const Rho12Result r = classify_rho12(c);
    return Json{{"case", to_string(r.kind)}, {"detail", r.detail}};
  });
  return {std::move(j), kExitOk};
}

Outcome cmd_construct(const Options& o) {
  Json spec{{"type", "construct"}, {"name", o.name}};
  if (o.name == "hamming") {
    spec["q"] = o.q;
    spec["r"] = o.r;
  } else if (o.name == "extended_hamming") {
    spec["r"] = o.r;
  } else if (o.name == "repetition") {
    spec["n"] = o.n;
    spec["q"] = o.q;
  } else if (o.name == "replicate") {
    spec["code"] = read_json_file(single_input(o));
    spec["s"] = o.s;
  } else if (o.name == "pad") {
    spec["code"] = read_json_file(single_input(o));
  } else if (o.name == "product") {
    if (o.inputs.size() != 2) throw InputError("product needs two input files");
    spec["left"] = read_json_file(o.inputs[0]);
    spec["right"] = read_json_file(o.inputs[1]);
  } else {
    throw InputError("unknown construction \"" + o.name + "\"");
  }
  return {spec_from_code(code_from_spec(spec, vertex_cap(o))), kExitOk};
}

Outcome cmd_search(const Options& o) {
  CensusParams p;
  p.q = o.q;
  p.min_length = o.min_length;
  p.max_length = o.max_length;
  p.max_redundancy = o.max_redundancy;
  p.max_vertices = vertex_cap(o);
  p.out_dir = o.out;
  const CensusSummary s = run_census(p);
  Json j = s.to_json();
  if (!o.out.empty()) j["out_dir"] = o.out;
  if (s.failing_record) j["failed_checks"] = failed_checks(*s.failing_record);
  return {std::move(j), s.failing_record ? kExitViolation : kExitOk};
}

Outcome cmd_replay(const Options& o) {
  const std::string& path = single_input(o);
  std::vector<Json> records;
  if (path.size() > 6 && path.substr(path.size() - 6) == ".jsonl") {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::string line;
    while (std::getline(in, line))
      if (!line.empty()) {
        try {
          records.push_back(Json::parse(line));
        } catch (const Json::parse_error& e) {
          throw InputError(path + ": " + e.what());
        }
      }
  } else {
    records.push_back(read_json_file(path));
  }
  Json j;
  Json results = Json::array();
  bool all = true;
  for (const Json& rec : records) {
    const ReplayResult r = replay(rec, vertex_cap(o));
    Json one;
    one["identical"] = r.identical;
    if (!r.differing_keys.empty()) one["differing_keys"] = r.differing_keys;
    if (r.witness_confirmed) one["witness_confirmed"] = *r.witness_confirmed;
    one["spectrum"] = r.recomputed.contains("spectrum") ? r.recomputed["spectrum"] : Json();
    one["checks"] = r.recomputed["checks"];
    all = all && r.identical && r.witness_confirmed.value_or(true);
    results.push_back(std::move(one));
  }
  j["records"] = records.size();
  j["identical"] = all;
  j["results"] = std::move(results);
  return {std::move(j), all ? kExitOk : kExitRefuted};
}

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::input:
    case ErrorKind::unsupported: return kExitInput;
    case ErrorKind::capacity: return kExitCapacity;
    case ErrorKind::theorem_violation: return kExitViolation;
  }
  return kExitInput;
}

void print_error(std::ostream& err, const std::string& kind, const std::string& message) {
  err << Json{{"error", kind}, {"message", message}}.dump() << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Completely regular codes in Hamming graphs", "crcode"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--max-vertices", o.max_vertices, "Materialization cap on q^n (default 2^26)");
    sub->add_flag("--allow-large", o.allow_large, "Acknowledge a cap above the default");
    sub->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", o.out, "Write the report here (search: output directory)");
  };
  auto with_input = [&](const char* name, const char* help, std::size_t count) {
    CLI::App* sub = app.add_subcommand(name, help);
    common(sub);
    sub->add_option("input", o.inputs, "Code-spec JSON file")->required()->expected(static_cast<int>(count));
    return sub;
  };
  std::map<std::string, Outcome (*)(const Options&)> handlers{
      {"check", cmd_check},     {"spectrum", cmd_spectrum},   {"quotient", cmd_quotient},
      {"classify", cmd_classify}, {"product", cmd_product},   {"decompose", cmd_decompose},
      {"construct", cmd_construct}, {"search", cmd_search}, {"replay", cmd_replay}};
  with_input("check", "Complete-regularity report", 1);
  with_input("spectrum", "Spectrum and arithmetic certificate", 1);
  with_input("quotient", "Quotient graph, distance-regularity and predicted array", 1);
  with_input("classify", "Quotient family and clique-based checks", 1);
  with_input("product", "Product criterion for two codes", 2)->add_flag("--verify", o.verify,
                                                                        "Confirm on the explicit product");
  with_input("decompose", "Product decomposition and structure cases", 1);
  with_input("replay", "Re-verify census records or a witness file", 1);
  CLI::App* construct = app.add_subcommand("construct", "Emit the code spec of a construction");
  common(construct);
  construct->add_option("name", o.name, "hamming, extended_hamming, repetition, replicate, product, pad")->required();
  construct->add_option("inputs", o.inputs, "Code-spec inputs for replicate, product and pad");
  construct->add_option("--q", o.q, "Alphabet size");
  construct->add_option("--r", o.r, "Redundancy");
  construct->add_option("--n", o.n, "Length");
  construct->add_option("--s", o.s, "Copies for replicate");
  CLI::App* search = app.add_subcommand("search", "Census of small linear codes");
  common(search);
  search->add_option("--q", o.q, "Field size");
  search->add_option("--min-length", o.min_length, "Smallest length");
  search->add_option("--max-length", o.max_length, "Largest length");
  search->add_option("--max-redundancy", o.max_redundancy, "Largest redundancy");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    print_error(err, "input", e.what());
    return kExitInput;
  }

  try {
    const std::string name = app.get_subcommands().front()->get_name();
    const Outcome result = handlers.at(name)(o);
    const std::string text = o.format == "text" ? render_text(result.report) : result.report.dump(2) + "\n";
    if (!o.out.empty() && name != "search") {
      std::ofstream f(o.out);
      if (!f) throw InputError("cannot write " + o.out);
      f << text;
    } else {
      out << text;
    }
    return result.code;
  } catch (const Error& e) {
    print_error(err, to_string(e.kind()), e.what());
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    print_error(err, "internal", e.what());
    return kExitViolation;
  }
}

}  // namespace crc

#include "crc/classify.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <tuple>

#include "crc/error.hpp"

namespace crc {

// ---- fixtures -------------------------------------------------------------

namespace {

void check_fixture_size(std::uint64_t vertices, const std::string& what) {
  if (vertices > kMaxFixtureVertices)
    throw CapacityError(what + " has " + std::to_string(vertices) + " vertices, above the fixture limit");
}

std::uint64_t checked_power(unsigned base, unsigned exp, const std::string& what) {
  std::uint64_t v = 1;
  for (unsigned i = 0; i < exp; ++i) {
    v *= base;
    check_fixture_size(v, what);
  }
  return v;
}

}  // namespace

Graph hamming_graph(unsigned m, unsigned q) {
  if (m == 0 || q < 2) throw InputError("H(m,q) needs m >= 1 and q >= 2");
  const std::string what = "H(" + std::to_string(m) + "," + std::to_string(q) + ")";
  const std::uint64_t count = checked_power(q, m, what);
  const AmbientSpace space(m, Alphabet::cyclic(q), count);
  std::vector<std::vector<Vertex>> adj(count);
  for (Word x = 0; x < count; ++x)
    space.for_each_neighbor(x, [&](Word y) { adj[x].push_back(static_cast<Vertex>(y)); });
  return Graph::from_adjacency(std::move(adj));
}

Graph folded_cube(unsigned n) {
  if (n < 2) throw InputError("folded cubes need n >= 2");
  const std::uint64_t count = checked_power(2, n - 1, "folded " + std::to_string(n) + "-cube");
  const Vertex mask = static_cast<Vertex>(count - 1);
  std::vector<std::vector<Vertex>> adj(count);
  for (Vertex x = 0; x < count; ++x) {
    for (unsigned i = 0; i + 1 < n; ++i) adj[x].push_back(x ^ (Vertex{1} << i));
    adj[x].push_back(x ^ mask);  // flipping the top coordinate, then taking the antipode
    std::sort(adj[x].begin(), adj[x].end());
    adj[x].erase(std::unique(adj[x].begin(), adj[x].end()), adj[x].end());
  }
  return Graph::from_adjacency(std::move(adj));
}

Graph shrikhande_graph() {
  constexpr int steps[6][2] = {{1, 0}, {3, 0}, {0, 1}, {0, 3}, {1, 1}, {3, 3}};
  std::vector<std::vector<Vertex>> adj(16);
  for (int b = 0; b < 4; ++b)
    for (int a = 0; a < 4; ++a)
      for (const auto& s : steps)
        adj[a + 4 * b].push_back(static_cast<Vertex>((a + s[0]) % 4 + 4 * ((b + s[1]) % 4)));
  return Graph::from_adjacency(std::move(adj));
}

Graph complete_graph(unsigned v) {
  if (v == 0) throw InputError("complete graphs need at least one vertex");
  check_fixture_size(v, "K_" + std::to_string(v));
  std::vector<std::vector<Vertex>> adj(v);
  for (Vertex x = 0; x < v; ++x)
    for (Vertex y = 0; y < v; ++y)
      if (x != y) adj[x].push_back(y);
  return Graph::from_adjacency(std::move(adj));
}

Graph doob_graph(unsigned shrikhande, unsigned cliques) {
  if (shrikhande == 0) throw InputError("Doob graphs need at least one Shrikhande factor");
  checked_power(4, 2 * shrikhande + cliques, "Doob graph");
  Graph g = shrikhande_graph();
  for (unsigned i = 1; i < shrikhande; ++i) g = graph_product(g, shrikhande_graph());
  for (unsigned i = 0; i < cliques; ++i) g = graph_product(g, complete_graph(4));
  return g;
}

Graph complete_bipartite_graph(unsigned v) {
  if (v == 0) throw InputError("K_{v,v} needs v >= 1");
  check_fixture_size(2ull * v, "K_{v,v}");
  std::vector<std::vector<Vertex>> adj(2 * v);
  for (Vertex x = 0; x < v; ++x)
    for (Vertex y = v; y < 2 * v; ++y) {
      adj[x].push_back(y);
      adj[y].push_back(x);
    }
  return Graph::from_adjacency(std::move(adj));
}

const Graph& construct_fixture(FixtureKind kind, unsigned p1, unsigned p2) {
  using Key = std::tuple<int, unsigned, unsigned>;
  static std::shared_mutex mutex;
  static std::map<Key, std::unique_ptr<const Graph>> cache;
  const Key key{static_cast<int>(kind), p1, p2};
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return *it->second;
  }
  Graph g;
  switch (kind) {
    case FixtureKind::hamming: g = hamming_graph(p1, p2); break;
    case FixtureKind::folded_cube: g = folded_cube(p1); break;
    case FixtureKind::shrikhande: g = shrikhande_graph(); break;
    case FixtureKind::doob: g = doob_graph(p1, p2); break;
    case FixtureKind::complete: g = complete_graph(p1); break;
    case FixtureKind::complete_bipartite: g = complete_bipartite_graph(p1); break;
  }
  std::unique_lock lock(mutex);
  auto [it, inserted] = cache.emplace(key, std::make_unique<const Graph>(std::move(g)));
  return *it->second;
}

// ---- recognition ----------------------------------------------------------

const char* to_string(FamilyTag t) noexcept {
  switch (t) {
    case FamilyTag::hamming: return "Hamming";
    case FamilyTag::doob: return "Doob";
    case FamilyTag::folded_cube: return "FoldedCube";
    case FamilyTag::ia654_non_folded: return "IA654_non_folded";
    case FamilyTag::complete_graph: return "CompleteGraph";
    case FamilyTag::complete_bipartite: return "CompleteBipartite";
    case FamilyTag::other: return "Other";
  }
  return "Other";
}

std::string QuotientFamily::name() const {
  std::string s = to_string(tag);
  if (params.empty()) return s;
  s += "(";
  for (std::size_t i = 0; i < params.size(); ++i) s += (i ? "," : "") + std::to_string(params[i]);
  return s + ")";
}

IntersectionArray hamming_array(unsigned m, unsigned q) {
  IntersectionArray a;
  for (unsigned i = 0; i < m; ++i) a.b.push_back((m - i) * (q - 1));
  for (unsigned i = 1; i <= m; ++i) a.c.push_back(i);
  return a;
}

IntersectionArray folded_cube_array(unsigned n) {
  const unsigned d = n / 2;
  IntersectionArray a;
  for (unsigned i = 0; i < d; ++i) a.b.push_back(n - i);
  for (unsigned i = 1; i <= d; ++i) a.c.push_back(i);
  if (n % 2 == 0) a.c.back() = n;
  return a;
}

bool is_folded_cube_array(const IntersectionArray& a) {
  const unsigned n = a.valency();
  return n >= 4 && a == folded_cube_array(n);
}

namespace {

std::optional<std::pair<unsigned, unsigned>> hamming_parameters(const IntersectionArray& a) {
  const unsigned m = a.diameter();
  if (m == 0 || a.valency() % m != 0) return std::nullopt;
  const unsigned q = a.valency() / m + 1;
  if (q < 2 || !(a == hamming_array(m, q))) return std::nullopt;
  return std::make_pair(m, q);
}

// Local graph of every vertex: components all K_{q-1} (count m) for Hamming; for
// q = 4 components K_3 or hexagons, giving Doob(s, c). Inconsistent shapes give nullopt.
std::optional<QuotientFamily> local_graph_family(const Graph& g, unsigned m, unsigned q) {
  std::optional<std::pair<unsigned, unsigned>> shape;  // (hexagons, cliques)
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const Graph local = local_graph(g, v);
    unsigned hexagons = 0, cliques = 0;
    for (const auto& comp : connected_components(local)) {
      if (comp.size() == q - 1 && is_clique(local, comp)) {
        ++cliques;
      } else if (q == 4 && comp.size() == 6 && is_cycle(induced_subgraph(local, comp))) {
        ++hexagons;
      } else {
        return std::nullopt;
      }
    }
    if (shape && *shape != std::make_pair(hexagons, cliques)) return std::nullopt;
    shape = std::make_pair(hexagons, cliques);
  }
  QuotientFamily f;
  if (shape->first == 0) {
    if (shape->second != m) return std::nullopt;
    f.tag = FamilyTag::hamming;
    f.params = {m, q};
  } else {
    if (2 * shape->first + shape->second != m) return std::nullopt;
    f.tag = FamilyTag::doob;
    f.params = {shape->first, shape->second};
  }
  return f;
}

constexpr std::size_t kEvidenceVertices = 1024;

void attach_isomorphism(QuotientFamily& f, const Graph& g, const Graph& fixture) {
  if (g.vertex_count() > kEvidenceVertices) return;
  f.isomorphism = graph_isomorphic(g, fixture);
  if (!f.isomorphism)
    throw TheoremViolation(f.name() + " was recognized from its parameters but is not isomorphic to the fixture");
}

}  // namespace

QuotientFamily classify_quotient(const Graph& g) {
  const DrgCertificate cert = certify_distance_regular(g);
  if (!cert.distance_regular) throw InputError("graph is not distance-regular");
  QuotientFamily f;
  f.array = *cert.array;
  const IntersectionArray& a = f.array;
  if (a.diameter() == 0) {
    f.tag = FamilyTag::complete_graph;
    f.params = {1};
    return f;
  }
  if (auto hp = hamming_parameters(a)) {
    auto [m, q] = *hp;
    if (auto local = local_graph_family(g, m, q)) {
      local->array = a;
      f = std::move(*local);
      if (f.tag == FamilyTag::hamming && g.vertex_count() <= kEvidenceVertices)
        attach_isomorphism(f, g, construct_fixture(FixtureKind::hamming, m, q));
      else if (f.tag == FamilyTag::doob && g.vertex_count() <= kEvidenceVertices)
        attach_isomorphism(f, g, construct_fixture(FixtureKind::doob, f.params[0], f.params[1]));
    }
    return f;
  }
  if (is_folded_cube_array(a)) {
    const unsigned n = a.valency();
    if (n == 6) {
      f.isomorphism = graph_isomorphic(g, construct_fixture(FixtureKind::folded_cube, 6));
      f.tag = f.isomorphism ? FamilyTag::folded_cube : FamilyTag::ia654_non_folded;
      if (f.isomorphism) f.params = {6};
      return f;
    }
    f.tag = FamilyTag::folded_cube;
    f.params = {n};
    attach_isomorphism(f, g, construct_fixture(FixtureKind::folded_cube, n));
    return f;
  }
  if (a.diameter() == 2 && a.b[0] >= 2 && a.b[1] == a.b[0] - 1 && a.c[0] == 1 && a.c[1] == a.b[0]) {
    f.tag = FamilyTag::complete_bipartite;
    f.params = {a.b[0]};
    attach_isomorphism(f, g, construct_fixture(FixtureKind::complete_bipartite, a.b[0]));
    return f;
  }
  return f;
}

// ---- theorem checks -------------------------------------------------------

const char* to_string(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::inapplicable: return "INAPPLICABLE";
  }
  return "INAPPLICABLE";
}

std::optional<unsigned> min_class_distance(const VertexPartition& p) {
  std::optional<unsigned> best;
  const auto classes = p.classes();
  const std::size_t count = p.is_coset_partition() ? 1 : classes.size();
  for (std::size_t i = 0; i < count; ++i) {
    if (classes[i].size() < 2) continue;
    const unsigned d = minimum_distance(Code::from_words(p.ambient(), classes[i]));
    best = best ? std::min(*best, d) : d;
  }
  return best;
}

std::vector<TheoremCheck> check_clique_restrictions(const QuotientFamily& family, const Graph& quotient, unsigned q,
                                         std::optional<unsigned> min_class_distance, bool coset_partition) {
  std::vector<TheoremCheck> out{{"quotient_clique_bound", CheckStatus::inapplicable, ""},
                                {"hamming_quotient_alphabet", CheckStatus::inapplicable, ""},
                                {"no_doob_quotient_large_alphabet", CheckStatus::inapplicable, ""},
                                {"no_folded_array_nonbinary", CheckStatus::inapplicable, ""},
                                {"additive_654_is_folded_6cube", CheckStatus::inapplicable, ""}};
  if (min_class_distance && *min_class_distance < 2) {
    for (auto& c : out) c.detail = "some class has minimum distance " + std::to_string(*min_class_distance);
    return out;
  }
  auto set = [](TheoremCheck& c, bool ok, std::string detail) {
    c.status = ok ? CheckStatus::pass : CheckStatus::fail;
    c.detail = std::move(detail);
  };
  const unsigned omega = max_clique(quotient);
  set(out[0], omega >= q, "clique number " + std::to_string(omega) + ", q = " + std::to_string(q));
  if (family.tag == FamilyTag::hamming)
    set(out[1], family.params[1] >= q,
        "q' = " + std::to_string(family.params[1]) + ", q = " + std::to_string(q));
  else
    out[1].detail = "quotient is " + family.name();
  if (q >= 4)
    set(out[2], family.tag != FamilyTag::doob, "quotient is " + family.name());
  else
    out[2].detail = "q < 4";
  if (q >= 3)
    set(out[3], !is_folded_cube_array(family.array), "array " + family.array.to_string());
  else
    out[3].detail = "q < 3";
  if (coset_partition && family.array == folded_cube_array(6))
    set(out[4], q == 2 && family.tag == FamilyTag::folded_cube, "q = " + std::to_string(q) + ", " + family.name());
  else
    out[4].detail = coset_partition ? "array is not {6,5,4;1,2,6}" : "not a coset partition";
  return out;
}

// ---- coordinate structure -------------------------------------------------

CoordinateRelation coordinate_classes(const Code& c, std::optional<unsigned> expected_blocks) {
  if (!c.is_additive()) throw InputError("the coordinate relation needs an additive code");
  const AmbientSpace& a = c.ambient();
  const unsigned n = a.length();
  std::vector<unsigned> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](unsigned x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j)
      if (c.contains(a.sub(a.unit(i), a.unit(j)))) parent[find(j)] = find(i);
  std::map<unsigned, std::vector<unsigned>> groups;
  for (unsigned i = 0; i < n; ++i) groups[find(i)].push_back(i);
  CoordinateRelation out;
  for (auto& [root, members] : groups) out.classes.push_back(std::move(members));
  std::sort(out.classes.begin(), out.classes.end());
  if (expected_blocks) {
    const unsigned m = *expected_blocks;
    bool ok = m > 0 && n % m == 0 && out.classes.size() == m;
    for (const auto& cls : out.classes) ok = ok && cls.size() == n / m;
    out.matches_blocks = ok;
  }
  return out;
}

ProductDecomposition decompose_product(const Code& c) {
  if (!c.is_additive()) throw InputError("decomposition needs an additive code");
  if (c.is_trivial()) throw InputError("decomposition needs a non-trivial code");
  const unsigned delta = minimum_distance(c);
  if (delta < 2) throw InputError("decomposition needs minimum distance >= 2, got " + std::to_string(delta));
  if (!certify_completely_regular(c).completely_regular)
    throw InputError("decomposition needs a completely regular code");

  const AmbientSpace& a = c.ambient();
  const VertexPartition cosets = coset_partition(c);
  const Graph quotient = quotient_graph(cosets);
  ProductDecomposition out;
  out.quotient = classify_quotient(quotient);
  if (out.quotient.tag != FamilyTag::hamming)
    throw InputError("coset graph is " + out.quotient.name() + ", not a Hamming graph");
  const unsigned m = out.quotient.params[0];
  const unsigned n = a.length();

  // Blocks: cliques of the local graph at the coset C itself.
  const std::uint32_t zero_class = cosets.class_of(0);
  const auto& nbrs = quotient.neighbors(zero_class);
  const Graph local = induced_subgraph(quotient, nbrs);
  std::map<Vertex, std::size_t> component_of;
  const auto comps = connected_components(local);
  for (std::size_t k = 0; k < comps.size(); ++k)
    for (Vertex idx : comps[k]) component_of[nbrs[idx]] = k;
  std::vector<std::vector<unsigned>> blocks(comps.size());
  for (unsigned j = 0; j < n; ++j) {
    std::optional<std::size_t> comp;
    for (Symbol s = 1; s < a.q(); ++s) {
      const auto it = component_of.find(cosets.class_of(a.unit(j, s)));
      if (it == component_of.end())
        throw TheoremViolation("coset of a weight-one word is not adjacent to C");
      if (comp && *comp != it->second)
        throw TheoremViolation("coordinate " + std::to_string(j) + " meets two cliques of the coset graph");
      comp = it->second;
    }
    blocks[*comp].push_back(j);
  }
  std::erase_if(blocks, [](const auto& b) { return b.empty(); });
  std::sort(blocks.begin(), blocks.end());
  if (blocks.size() != m || n % m != 0)
    throw TheoremViolation("found " + std::to_string(blocks.size()) + " coordinate blocks, expected " +
                           std::to_string(m));
  for (const auto& b : blocks)
    if (b.size() != n / m) throw TheoremViolation("coordinate blocks have unequal sizes");

  // Factors: codewords supported inside a block, projected onto it.
  std::vector<std::vector<Word>> embedded(m);
  for (unsigned i = 0; i < m; ++i) {
    const AmbientSpace block_space(static_cast<unsigned>(blocks[i].size()), a.alphabet(), a.max_vertices());
    std::vector<bool> inside(n, false);
    for (unsigned j : blocks[i]) inside[j] = true;
    std::vector<Word> words;
    for (Word w : c.members()) {
      bool supported = true;
      for (unsigned j = 0; j < n && supported; ++j) supported = inside[j] || a.digit(w, j) == 0;
      if (!supported) continue;
      embedded[i].push_back(w);
      std::vector<Symbol> digits;
      for (unsigned j : blocks[i]) digits.push_back(a.digit(w, j));
      words.push_back(block_space.encode(digits));
    }
    Code factor = Code::from_words(block_space, std::move(words));
    const CrCertificate cert = certify_completely_regular(factor);
    if (!cert.completely_regular || cert.rho != 1)
      throw TheoremViolation("factor " + std::to_string(i) + " is not completely regular with covering radius 1");
    out.factor_numbers.push_back(*cert.numbers);
    out.factors.push_back(std::move(factor));
  }

  // The product of the factors must be C itself.
  std::vector<Word> product{0};
  for (unsigned i = 0; i < m; ++i) {
    std::vector<Word> next;
    next.reserve(product.size() * embedded[i].size());
    for (Word p : product)
      for (Word e : embedded[i]) next.push_back(a.add(p, e));
    product = std::move(next);
  }
  std::sort(product.begin(), product.end());
  if (product != c.members()) throw TheoremViolation("the product of the recovered factors differs from C");
  out.blocks = std::move(blocks);
  return out;
}

namespace {

GFMatrix reduced_check(const Code& c) {
  RrefResult r = rref(c.linear().parity_check);
  return r.reduced.select_rows(r.rank);
}

std::vector<Symbol> normalized(const Alphabet& f, std::vector<Symbol> v, Symbol* applied = nullptr) {
  const Symbol s = normalize_projectively(f, v);
  if (applied) *applied = s;
  return v;
}

std::uint64_t projective_point_count(unsigned r, unsigned q) {
  std::uint64_t total = 0, power = 1;
  for (unsigned i = 0; i < r; ++i) {
    total += power;
    power *= q;
  }
  return total;
}

}  // namespace

ColumnClasses column_classes(const Code& c) {
  if (!c.is_linear()) throw InputError("column classes need a linear code");
  if (c.is_trivial()) throw InputError("column classes need a non-trivial code");
  if (!is_reduced(c)) throw InputError("column classes need a reduced code");
  const CrCertificate cert = certify_completely_regular(c);
  if (!cert.completely_regular) throw InputError("column classes need a completely regular code");

  const Alphabet& f = c.ambient().alphabet();
  const GFMatrix h = reduced_check(c);
  ColumnClasses out;
  out.scale.resize(h.cols());
  std::map<std::vector<Symbol>, std::size_t> index;
  std::vector<std::vector<Symbol>> points;
  for (std::size_t j = 0; j < h.cols(); ++j) {
    Symbol applied = 0;
    auto v = normalized(f, h.column(j), &applied);
    if (applied == 0) throw InputError("parity check has a zero column");
    out.scale[j] = f.inv(applied);
    auto [it, fresh] = index.emplace(v, out.classes.size());
    if (fresh) {
      out.classes.emplace_back();
      out.representatives.push_back(static_cast<unsigned>(j));
      points.push_back(v);
    }
    out.classes[it->second].push_back(static_cast<unsigned>(j));
  }
  const std::size_t size0 = out.classes.front().size();
  out.uniform = std::all_of(out.classes.begin(), out.classes.end(), [&](const auto& k) { return k.size() == size0; });
  out.gamma1 = cert.numbers->gamma[1];
  out.matches_gamma1 = out.uniform && size0 == *out.gamma1;
  GFMatrix dedup(f, h.rows(), points.size());
  for (std::size_t p = 0; p < points.size(); ++p)
    for (std::size_t i = 0; i < h.rows(); ++i) dedup(i, p) = points[p][i];
  out.deduplicated_check = dedup;
  out.shortened = Code::from_parity_check(dedup, c.ambient().max_vertices());
  if (out.shortened->size() >= 2) out.shortened_distance = minimum_distance(*out.shortened);
  return out;
}

bool is_hamming_check(const GFMatrix& h) {
  const Alphabet& f = h.alphabet();
  if (!f.is_field() || h.rows() == 0) return false;
  if (rank(h) != h.rows()) return false;
  const auto r = static_cast<unsigned>(h.rows());
  if (h.cols() != projective_point_count(r, f.size())) return false;
  std::vector<std::vector<Symbol>> seen;
  for (std::size_t j = 0; j < h.cols(); ++j) {
    Symbol applied = 0;
    auto v = normalized(f, h.column(j), &applied);
    if (applied == 0) return false;
    seen.push_back(std::move(v));
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

namespace {

// f with f . h_j = 1 for every column, if any.
std::optional<std::vector<Symbol>> affine_functional(const GFMatrix& h) {
  const Alphabet& f = h.alphabet();
  GFMatrix system(f, h.cols(), h.rows() + 1);
  for (std::size_t j = 0; j < h.cols(); ++j) {
    for (std::size_t i = 0; i < h.rows(); ++i) system(j, i) = h(i, j);
    system(j, h.rows()) = 1;
  }
  const RrefResult r = rref(system);
  if (!r.pivot_columns.empty() && r.pivot_columns.back() == h.rows()) return std::nullopt;
  std::vector<Symbol> sol(h.rows(), 0);
  for (std::size_t k = 0; k < r.rank; ++k) sol[r.pivot_columns[k]] = r.reduced(k, h.rows());
  return sol;
}

}  // namespace

bool is_extended_hamming_check(const GFMatrix& h) {
  if (h.alphabet().size() != 2 || h.rows() < 3) return false;
  if (rank(h) != h.rows()) return false;
  if (h.cols() != (std::size_t{1} << (h.rows() - 1))) return false;
  std::vector<std::vector<Symbol>> cols;
  for (std::size_t j = 0; j < h.cols(); ++j) cols.push_back(h.column(j));
  std::sort(cols.begin(), cols.end());
  if (std::adjacent_find(cols.begin(), cols.end()) != cols.end()) return false;
  return affine_functional(h).has_value();
}

namespace {

// Codewords, coordinates and (coordinate, symbol) pairs, coloured 0 / 1 / 2.
std::pair<Graph, std::vector<std::uint32_t>> code_incidence_graph(const Code& c) {
  const AmbientSpace& a = c.ambient();
  const std::size_t words = c.size();
  const unsigned n = a.length(), q = a.q();
  const std::size_t total = words + n + static_cast<std::size_t>(n) * q;
  std::vector<Edge> edges;
  auto pair_vertex = [&](unsigned j, Symbol s) { return static_cast<Vertex>(words + n + j * q + s); };
  for (unsigned j = 0; j < n; ++j)
    for (Symbol s = 0; s < q; ++s) edges.emplace_back(static_cast<Vertex>(words + j), pair_vertex(j, s));
  for (std::size_t w = 0; w < words; ++w)
    for (unsigned j = 0; j < n; ++j) edges.emplace_back(static_cast<Vertex>(w), pair_vertex(j, a.digit(c.members()[w], j)));
  std::vector<std::uint32_t> colors(total, 2);
  std::fill(colors.begin(), colors.begin() + static_cast<std::ptrdiff_t>(words), 0);
  std::fill(colors.begin() + static_cast<std::ptrdiff_t>(words),
            colors.begin() + static_cast<std::ptrdiff_t>(words + n), 1);
  return {Graph::from_edges(total, edges), std::move(colors)};
}

}  // namespace

std::optional<bool> codes_equivalent(const Code& x, const Code& y) {
  if (x.length() != y.length() || !(x.ambient().alphabet() == y.ambient().alphabet()) || x.size() != y.size())
    return false;
  const std::size_t total = x.size() + x.length() * (1 + x.q());
  if (total > kMaxIsomorphismVertices) return std::nullopt;
  const auto [gx, cx] = code_incidence_graph(x);
  const auto [gy, cy] = code_incidence_graph(y);
  return graph_isomorphic(gx, gy, cx, cy).has_value();
}

const char* to_string(Rho12Case c) noexcept {
  switch (c) {
    case Rho12Case::hamming: return "hamming";
    case Rho12Case::product_of_hamming: return "product_of_hamming";
    case Rho12Case::extended_hamming: return "extended_hamming";
    case Rho12Case::undecided: return "undecided";
    case Rho12Case::none: return "none";
  }
  return "none";
}

namespace {

struct ArithmeticFacts {
  CrAnalysis analysis;
  unsigned rho;
};

ArithmeticFacts require_arithmetic_cr(const Code& c, const char* who) {
  if (!c.is_linear()) throw InputError(std::string(who) + " needs a linear code");
  if (c.is_trivial()) throw InputError(std::string(who) + " needs a non-trivial code");
  CrAnalysis an = analyze(c);
  if (!an.certificate.completely_regular) throw InputError(std::string(who) + " needs a completely regular code");
  if (!an.arithmetic->arithmetic) throw InputError(std::string(who) + " needs an arithmetic spectrum");
  const unsigned rho = an.certificate.rho;
  return {std::move(an), rho};
}

}  // namespace

Rho12Result classify_rho12(const Code& c) {
  const auto facts = require_arithmetic_cr(c, "the covering radius <= 2 classification");
  if (facts.rho > 2) throw InputError("the covering radius <= 2 classification needs rho <= 2");
  if (!facts.analysis.minimum_distance || *facts.analysis.minimum_distance < 3)
    throw InputError("the covering radius <= 2 classification needs minimum distance >= 3");
  Rho12Result out;
  if (c.length() > 64) {
    out.kind = Rho12Case::undecided;
    out.detail = "equivalence tests are limited to length 64";
    return out;
  }
  const GFMatrix h = reduced_check(c);
  const unsigned q = c.q();
  if (facts.rho == 1) {
    const BigInt covered = BigInt(c.size()) * (1 + c.length() * (q - 1));
    const bool perfect = covered == c.ambient().capacity();
    if (perfect && is_hamming_check(h)) {
      out.kind = Rho12Case::hamming;
      out.detail = "perfect; check columns are the points of PG(" + std::to_string(h.rows() - 1) + "," +
                   std::to_string(q) + ")";
    } else {
      out.detail = perfect ? "perfect but the check columns are not all projective points" : "not perfect";
    }
    return out;
  }
  const QuotientFamily family = classify_quotient(coset_graph_by_syndrome(c).graph);
  if (family.tag == FamilyTag::hamming && family.params[0] == 2) {
    const ProductDecomposition d = decompose_product(c);
    bool both = true;
    for (const Code& factor : d.factors) both = both && factor.is_linear() && is_hamming_check(reduced_check(factor));
    if (both && d.factors[0].length() == d.factors[1].length()) {
      out.kind = Rho12Case::product_of_hamming;
      out.detail = "C = D x D with D a Hamming code of length " + std::to_string(d.factors[0].length());
      return out;
    }
  }
  if (q == 2 && is_extended_hamming_check(h)) {
    out.kind = Rho12Case::extended_hamming;
    out.detail = "check columns form an affine hyperplane of GF(2)^" + std::to_string(h.rows());
    return out;
  }
  out.detail = "coset graph " + family.name() + "; neither D x D nor extended Hamming";
  return out;
}

namespace {

// Maps every codeword of C onto nullsp [N | ... | N] (gamma1 copies) through the
// column classes: coordinate j of class p at position k goes to k L + target[p],
// scaled by scale[j] * factor[p]. True when the image is exactly that nullspace.
bool verify_normal_form(const Code& c, const ColumnClasses& cols, const GFMatrix& normal,
                        const std::vector<std::size_t>& target, const std::vector<Symbol>& factor) {
  const AmbientSpace& a = c.ambient();
  const Alphabet& f = a.alphabet();
  const std::size_t width = normal.cols();
  const unsigned copies = static_cast<unsigned>(cols.classes.front().size());
  const GFMatrix replicated = replicate_columns(normal, copies);
  if (replicated.cols() != a.length()) return false;
  std::vector<std::size_t> dest(a.length());
  std::vector<Symbol> mult(a.length());
  for (std::size_t p = 0; p < cols.classes.size(); ++p)
    for (std::size_t k = 0; k < cols.classes[p].size(); ++k) {
      const unsigned j = cols.classes[p][k];
      dest[j] = k * width + target[p];
      mult[j] = f.mul(cols.scale[j], factor[p]);
    }
  std::vector<Word> image;
  image.reserve(c.size());
  for (Word w : c.members()) {
    Word y = 0;
    for (unsigned j = 0; j < a.length(); ++j) y += a.unit(static_cast<unsigned>(dest[j]), f.mul(mult[j], a.digit(w, j)));
    image.push_back(y);
  }
  std::sort(image.begin(), image.end());
  const Code target_code = Code::from_parity_check(replicated, a.max_vertices());
  return image == target_code.members();
}

// For each column s_p of `s`, the column of `normal` proportional to A s_p and the factor.
bool match_columns(const GFMatrix& a, const GFMatrix& s, const GFMatrix& normal, std::vector<std::size_t>& target,
                   std::vector<Symbol>& factor) {
  const Alphabet& f = s.alphabet();
  std::map<std::vector<Symbol>, std::size_t> where;
  for (std::size_t j = 0; j < normal.cols(); ++j) where.emplace(normalized(f, normal.column(j)), j);
  const GFMatrix image = multiply(a, s);
  target.assign(s.cols(), 0);
  factor.assign(s.cols(), 0);
  std::vector<bool> used(normal.cols(), false);
  for (std::size_t p = 0; p < s.cols(); ++p) {
    Symbol applied = 0;
    auto v = normalized(f, image.column(p), &applied);
    const auto it = where.find(v);
    if (applied == 0 || it == where.end() || used[it->second]) return false;
    used[it->second] = true;
    target[p] = it->second;
    // A s_p = applied^{-1} v and the normal column equals mu v
    const auto col = normal.column(it->second);
    const Symbol lead = *std::find_if(col.begin(), col.end(), [](Symbol x) { return x != 0; });
    factor[p] = f.div(1, f.mul(applied, lead));
  }
  return std::find(used.begin(), used.end(), false) == used.end();
}

GFMatrix identity(const Alphabet& f, std::size_t r) {
  GFMatrix m(f, r, r);
  for (std::size_t i = 0; i < r; ++i) m(i, i) = 1;
  return m;
}

// Invertible matrix whose last row is `row`.
GFMatrix completion_with_last_row(const Alphabet& f, const std::vector<Symbol>& row) {
  const std::size_t r = row.size();
  std::vector<std::vector<Symbol>> rows;
  for (std::size_t i = 0; i < r && rows.size() + 1 < r; ++i) {
    std::vector<std::vector<Symbol>> trial = rows;
    std::vector<Symbol> e(r, 0);
    e[i] = 1;
    trial.push_back(e);
    trial.push_back(row);
    if (rank(GFMatrix::from_rows(f, trial)) == trial.size()) rows.push_back(e);
  }
  rows.push_back(row);
  return GFMatrix::from_rows(f, rows);
}

}  // namespace

StructureReport arithmetic_structure_cases(const Code& c) {
  const auto facts = require_arithmetic_cr(c, "the arithmetic structure theorem");
  if (!is_reduced(c)) throw InputError("the arithmetic structure theorem needs a reduced code");
  StructureReport out;
  out.columns = column_classes(c);
  if (!out.columns.matches_gamma1)
    throw TheoremViolation("parallel-column classes are not all of size gamma_1");
  const unsigned rho = facts.rho;
  const unsigned q = c.q();
  const unsigned gamma1 = *out.columns.gamma1;
  const Alphabet& f = c.ambient().alphabet();
  const CosetGraph coset = coset_graph_by_syndrome(c);
  out.quotient = classify_quotient(coset.graph);
  const GFMatrix& s = out.columns.deduplicated_check;
  const auto width = static_cast<unsigned>(s.cols());
  const auto copies = std::to_string(gamma1);

  // (a) binary, D a repetition code, folded-cube quotient.
  const Code& d = *out.columns.shortened;
  if (q == 2 && width >= 2 && d.size() == 2 && d.contains((Word{1} << width) - 1) &&
      graph_isomorphic(coset.graph, construct_fixture(FixtureKind::folded_cube, width))) {
    std::vector<std::size_t> first(width - 1);
    std::iota(first.begin(), first.end(), std::size_t{0});
    const GFMatrix a = inverse(s.select_columns(first));
    const GFMatrix m = repetition_parity_check(width, f);
    std::vector<std::size_t> target;
    std::vector<Symbol> factor;
    const bool ok = match_columns(a, s, m, target, factor) && verify_normal_form(c, out.columns, m, target, factor);
    out.cases.push_back({'a', gamma1, "nullsp [M|...|M], " + copies + " copies, M = [I|1] of length " +
                                          std::to_string(width), ok});
  }
  // (b) covering radius 1 and the deduplicated check is a Hamming check.
  if (rho == 1 && is_hamming_check(s)) {
    const GFMatrix h = hamming_parity_check(static_cast<unsigned>(s.rows()), f);
    std::vector<std::size_t> target;
    std::vector<Symbol> factor;
    const bool ok = match_columns(identity(f, s.rows()), s, h, target, factor) &&
                    verify_normal_form(c, out.columns, h, target, factor);
    out.cases.push_back({'b', gamma1, "nullsp [H|...|H], " + copies + " copies, H the Hamming check of redundancy " +
                                          std::to_string(s.rows()), ok});
  }
  // (c) binary, covering radius 2, extended Hamming check.
  if (rho == 2 && q == 2 && is_extended_hamming_check(s)) {
    const auto functional = affine_functional(s);
    const GFMatrix a = completion_with_last_row(f, *functional);
    const GFMatrix e = extended_hamming_parity_check(static_cast<unsigned>(s.rows() - 1));
    std::vector<std::size_t> target;
    std::vector<Symbol> factor;
    const bool ok = match_columns(a, s, e, target, factor) && verify_normal_form(c, out.columns, e, target, factor);
    out.cases.push_back({'c', gamma1, "nullsp [E|...|E], " + copies + " copies, E the extended Hamming check of length " +
                                          std::to_string(width), ok});
  }
  // (d) rho copies of one covering-radius-1 code.
  if (rho >= 2 && out.quotient.tag == FamilyTag::hamming && out.quotient.params[0] == rho) {
    const ProductDecomposition dec = decompose_product(c);
    bool equivalent = true;
    bool decided = true;
    for (std::size_t i = 1; i < dec.factors.size(); ++i) {
      const auto e = codes_equivalent(dec.factors[0], dec.factors[i]);
      if (!e) decided = false;
      equivalent = equivalent && e.value_or(true);
    }
    if (equivalent) {
      out.cases.push_back({'d', gamma1, "C1^" + std::to_string(rho) + " with C1 of length " +
                                            std::to_string(dec.factors[0].length()), decided});
      if (!decided) out.caveat = "factor equivalence exceeded the isomorphism limit";
      else if (q >= 4) out.caveat = "factor equivalence allows arbitrary symbol permutations per coordinate";
    }
  }
  for (const auto& k : out.cases)
    if (!k.verified && k.label != 'd')
      throw TheoremViolation(std::string("case (") + k.label + ") matched but its normal form does not map onto C");
  return out;
}

HammingQuotientReport hamming_coset_graph_cases(const Code& c) {
  if (!c.is_linear()) throw InputError("the Hamming coset graph corollary needs a linear code");
  if (c.is_trivial()) throw InputError("the Hamming coset graph corollary needs a non-trivial code");
  const CrAnalysis an = analyze(c);
  if (!an.certificate.completely_regular) throw InputError("the code is not completely regular");
  HammingQuotientReport out;
  out.quotient = classify_quotient(coset_graph_by_syndrome(c).graph);
  if (out.quotient.tag != FamilyTag::hamming)
    throw InputError("coset graph is " + out.quotient.name() + ", not a Hamming graph");
  const unsigned m = out.quotient.params[0], qq = out.quotient.params[1];
  const unsigned gamma1 = an.certificate.numbers->gamma[1];
  const unsigned q = c.q();
  if ((gamma1 * qq) % q != 0)
    throw TheoremViolation("gamma_1 q' / q = " + std::to_string(gamma1 * qq) + "/" + std::to_string(q) +
                           " is not an integer");
  out.t = gamma1 * qq / q;
  const auto k = static_cast<std::int64_t>(c.ambient().valency());
  for (unsigned h = 0; h <= m; ++h) out.derived_spectrum.push_back(k - static_cast<std::int64_t>(h * gamma1 * qq));
  if (out.derived_spectrum != an.spectrum->eigenvalues)
    throw TheoremViolation("spectrum derived from the Hamming coset graph differs from Spec(C)");
  const ReducedCode reduced = reduce_code(c);
  if (reduced.code.is_trivial()) throw InputError("the code reduces to a trivial code");
  out.stripped_coordinates = reduced.stripped_coordinates;
  out.structure = arithmetic_structure_cases(reduced.code);
  for (const auto& k2 : out.structure.cases) {
    if (k2.label == 'b') out.cases.push_back('a');
    if (k2.label == 'c') out.cases.push_back('b');
    if (k2.label == 'd') out.cases.push_back('c');
  }
  if (out.cases.empty()) throw TheoremViolation("no corollary case matches a code with a Hamming coset graph");
  return out;
}

}  // namespace crc

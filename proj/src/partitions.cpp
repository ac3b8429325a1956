#include "crc/partitions.hpp"

#include <algorithm>
#include <map>

#include "crc/error.hpp"

namespace crc {

VertexPartition::VertexPartition(AmbientSpace ambient, std::vector<std::uint32_t> class_of, std::vector<Word> reps,
                                 bool coset)
    : ambient_(std::move(ambient)), class_of_(std::move(class_of)), representatives_(std::move(reps)), coset_(coset) {}

VertexPartition VertexPartition::from_class_map(AmbientSpace ambient, std::vector<std::uint32_t> class_of) {
  const std::uint64_t count = ambient.vertex_count();
  if (class_of.size() != count)
    throw InputError("class map has " + std::to_string(class_of.size()) + " entries, expected " +
                     std::to_string(count));
  std::map<std::uint32_t, std::uint32_t> relabel;
  std::vector<Word> reps;
  for (Word x = 0; x < count; ++x) {
    auto [it, fresh] = relabel.emplace(class_of[x], static_cast<std::uint32_t>(reps.size()));
    if (fresh) reps.push_back(x);
    class_of[x] = it->second;
  }
  return VertexPartition(std::move(ambient), std::move(class_of), std::move(reps), false);
}

VertexPartition VertexPartition::from_classes(AmbientSpace ambient, const std::vector<std::vector<Word>>& classes) {
  const std::uint64_t count = ambient.vertex_count();
  constexpr std::uint32_t unset = ~std::uint32_t{0};
  std::vector<std::uint32_t> class_of(count, unset);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].empty()) throw InputError("partition class " + std::to_string(i) + " is empty");
    for (Word w : classes[i]) {
      if (w >= count) throw InputError("partition word out of range");
      if (class_of[w] != unset) throw InputError("word " + ambient.to_string(w) + " lies in two classes");
      class_of[w] = static_cast<std::uint32_t>(i);
    }
  }
  for (Word x = 0; x < count; ++x)
    if (class_of[x] == unset) throw InputError("word " + ambient.to_string(x) + " lies in no class");
  return from_class_map(std::move(ambient), std::move(class_of));
}

std::vector<std::vector<Word>> VertexPartition::classes() const {
  std::vector<std::vector<Word>> out(class_count());
  for (Word x = 0; x < class_of_.size(); ++x) out[class_of_[x]].push_back(x);
  return out;
}

std::vector<Word> VertexPartition::members(std::uint32_t cls) const {
  std::vector<Word> out;
  for (Word x = 0; x < class_of_.size(); ++x)
    if (class_of_[x] == cls) out.push_back(x);
  return out;
}

VertexPartition coset_partition(const Code& c) {
  if (!c.is_additive()) throw InputError("coset partitions need an additive code");
  const AmbientSpace& a = c.ambient();
  const std::uint64_t count = a.vertex_count();
  constexpr std::uint32_t unset = ~std::uint32_t{0};
  std::vector<std::uint32_t> class_of(count, unset);
  std::vector<Word> reps;
  for (Word x = 0; x < count; ++x) {
    if (class_of[x] != unset) continue;
    const auto id = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
    for (Word w : c.members()) class_of[a.add(x, w)] = id;
  }
  return VertexPartition(a, std::move(class_of), std::move(reps), true);
}

CrPartitionCertificate certify_cr_partition(const VertexPartition& p, bool translation_shortcut) {
  if (translation_shortcut && !p.is_coset_partition())
    throw InputError("the translation shortcut applies to coset partitions only");
  CrPartitionCertificate out;
  out.used_translation_shortcut = translation_shortcut;
  const auto classes = p.classes();
  const std::size_t checked = translation_shortcut ? 1 : classes.size();
  for (std::size_t i = 0; i < checked; ++i) {
    const Code cls = Code::from_words(p.ambient(), classes[i]);
    CrCertificate cert = certify_completely_regular(cls);
    if (!cert.completely_regular) {
      out.failing_class = static_cast<std::uint32_t>(i);
      out.class_witness = cert.witness;
      return out;
    }
    if (!out.numbers) {
      out.numbers = std::move(cert.numbers);
    } else if (!(*out.numbers == *cert.numbers)) {
      out.numbers.reset();
      out.mismatched_classes = {0, static_cast<std::uint32_t>(i)};
      return out;
    }
  }
  out.completely_regular = true;
  return out;
}

Graph quotient_graph(const VertexPartition& p) {
  const std::size_t t = p.class_count();
  if (t > kMaxQuotientClasses)
    throw CapacityError("quotient graph with " + std::to_string(t) + " classes exceeds the explicit limit of " +
                        std::to_string(kMaxQuotientClasses));
  const AmbientSpace& a = p.ambient();
  const auto classes = p.classes();
  std::vector<std::vector<Vertex>> adj(t);
  constexpr std::uint32_t none = ~std::uint32_t{0};
  std::vector<std::uint32_t> stamp(t, none);
  for (std::uint32_t cls = 0; cls < t; ++cls) {
    stamp[cls] = cls;
    for (Word x : classes[cls])
      a.for_each_neighbor(x, [&](Word y) {
        const std::uint32_t other = p.class_of(y);
        if (stamp[other] != cls) {
          stamp[other] = cls;
          adj[cls].push_back(other);
        }
      });
  }
  return Graph::from_adjacency(std::move(adj));
}

namespace {

constexpr std::uint64_t kMaxSyndromeVertices = std::uint64_t{1} << 20;

std::uint64_t encode_column(const GFMatrix& m, std::size_t col, Symbol lambda) {
  const Alphabet& f = m.alphabet();
  std::uint64_t s = 0;
  for (std::size_t i = m.rows(); i-- > 0;) s = s * f.size() + f.mul(lambda, m(i, col));
  return s;
}

}  // namespace

CosetGraph coset_graph_by_syndrome(const Code& c) {
  if (!c.is_linear()) throw InputError("syndrome coset graphs need a linear code");
  const Alphabet& f = c.ambient().alphabet();
  RrefResult red = rref(c.linear().parity_check);
  CosetGraph out{Graph(), static_cast<unsigned>(red.rank), red.reduced.select_rows(red.rank)};
  if (out.redundancy == 0) {
    out.graph = Graph::from_adjacency({{}});
    out.graph.set_labels({""});
    return out;
  }
  const AmbientSpace syndromes(out.redundancy, f, kMaxSyndromeVertices);
  const std::uint64_t count = syndromes.vertex_count();
  std::vector<std::uint64_t> connection;
  for (std::size_t j = 0; j < out.reduced_parity_check.cols(); ++j)
    for (Symbol lambda = 1; lambda < f.size(); ++lambda) {
      const std::uint64_t s = encode_column(out.reduced_parity_check, j, lambda);
      if (s != 0) connection.push_back(s);
    }
  std::sort(connection.begin(), connection.end());
  connection.erase(std::unique(connection.begin(), connection.end()), connection.end());
  std::vector<std::vector<Vertex>> adj(count);
  std::vector<std::string> labels(count);
  for (std::uint64_t s = 0; s < count; ++s) {
    adj[s].reserve(connection.size());
    for (std::uint64_t g : connection) adj[s].push_back(static_cast<Vertex>(syndromes.add(s, g)));
    labels[s] = syndromes.to_string(s);
  }
  out.graph = Graph::from_adjacency(std::move(adj));
  out.graph.set_labels(std::move(labels));
  return out;
}

std::uint64_t syndrome_of(const CosetGraph& g, const AmbientSpace& ambient, Word x) {
  const auto digits = ambient.decode(x);
  const auto s = multiply(g.reduced_parity_check, digits);
  std::uint64_t out = 0;
  for (std::size_t i = s.size(); i-- > 0;) out = out * ambient.q() + s[i];
  return out;
}

std::vector<Vertex> coset_to_syndrome(const CosetGraph& g, const VertexPartition& cosets) {
  std::vector<Vertex> out;
  out.reserve(cosets.class_count());
  for (Word rep : cosets.representatives())
    out.push_back(static_cast<Vertex>(syndrome_of(g, cosets.ambient(), rep)));
  return out;
}

std::vector<unsigned> IntersectionArray::a() const {
  const unsigned d = diameter();
  std::vector<unsigned> out(d + 1);
  for (unsigned i = 0; i <= d; ++i) {
    const unsigned bi = i < d ? b[i] : 0;
    const unsigned ci = i > 0 ? c[i - 1] : 0;
    out[i] = valency() - bi - ci;
  }
  return out;
}

std::string IntersectionArray::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
  s += ";";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + "}";
}

DrgCertificate certify_distance_regular(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw InputError("empty graph");
  if (!is_connected(g)) throw InputError("distance-regularity is only certified for connected graphs");

  struct Reference {
    Vertex root, vertex;
    unsigned b, c;
  };
  std::vector<Reference> ref;  // per distance, from the first root
  DrgCertificate out;
  std::vector<int> dist(n);
  std::vector<Vertex> order;
  order.reserve(n);
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), kUnreachable);
    order.assign(1, root);
    dist[root] = 0;
    for (std::size_t head = 0; head < order.size(); ++head)
      for (Vertex v : g.neighbors(order[head]))
        if (dist[v] == kUnreachable) {
          dist[v] = dist[order[head]] + 1;
          order.push_back(v);
        }
    for (Vertex y : order) {
      const auto i = static_cast<unsigned>(dist[y]);
      unsigned b = 0, c = 0;
      for (Vertex z : g.neighbors(y)) {
        if (dist[z] == dist[y] + 1) ++b;
        if (dist[z] + 1 == dist[y]) ++c;
      }
      if (i == ref.size()) {
        if (root != 0) {
          // deeper than the reference root: the reference had b = 0 at the previous distance
          out.witness = DrgWitness{ref.back().root, ref.back().vertex, root, y, i - 1, 'b', 0, 1};
          return out;
        }
        ref.push_back({root, y, b, c});
        continue;
      }
      const Reference& r = ref[i];
      if (c != r.c) {
        out.witness = DrgWitness{r.root, r.vertex, root, y, i, 'c', r.c, c};
        return out;
      }
      if (b != r.b) {
        out.witness = DrgWitness{r.root, r.vertex, root, y, i, 'b', r.b, b};
        return out;
      }
    }
  }
  IntersectionArray array;
  const auto d = static_cast<unsigned>(ref.size() - 1);
  for (unsigned i = 0; i < d; ++i) array.b.push_back(ref[i].b);
  for (unsigned i = 1; i <= d; ++i) array.c.push_back(ref[i].c);
  out.distance_regular = true;
  out.array = std::move(array);
  return out;
}

IntersectionArray predicted_quotient_array(const IntersectionNumbers& x) {
  const unsigned rho = x.rho();
  IntersectionArray out;
  if (rho == 0) return out;
  const unsigned g1 = x.gamma[1];
  if (g1 == 0) throw InputError("gamma_1 is zero");
  auto exact = [g1](long long v, const char* what, unsigned i) {
    if (v < 0 || v % g1 != 0)
      throw InputError(std::string(what) + "_" + std::to_string(i) + " = " + std::to_string(v) +
                       " is not a nonnegative multiple of gamma_1 = " + std::to_string(g1));
    return static_cast<unsigned>(v / g1);
  };
  for (unsigned i = 0; i < rho; ++i) out.b.push_back(exact(x.beta[i], "beta", i));
  for (unsigned i = 1; i <= rho; ++i) out.c.push_back(exact(x.gamma[i], "gamma", i));
  for (unsigned i = 0; i <= rho; ++i)
    exact(static_cast<long long>(x.alpha[i]) - static_cast<long long>(x.alpha[0]), "alpha-alpha0", i);
  return out;
}

std::vector<std::int64_t> drg_spectrum(const IntersectionArray& array) {
  const unsigned d = array.diameter();
  const auto a = array.a();
  std::vector<std::int64_t> diag(a.begin(), a.end());
  std::vector<std::int64_t> upper(array.b.begin(), array.b.end());
  std::vector<std::int64_t> lower(array.c.begin(), array.c.end());
  const auto k = static_cast<std::int64_t>(array.valency());
  std::vector<std::int64_t> roots;
  for (std::int64_t theta = k; theta >= -k; --theta)
    if (tridiagonal_determinant(diag, upper, lower, theta) == 0) roots.push_back(theta);
  if (roots.size() != d + 1)
    throw UnsupportedOperation("intersection array " + array.to_string() + " has " + std::to_string(roots.size()) +
                               " integer eigenvalues, expected " + std::to_string(d + 1));
  return roots;
}

}  // namespace crc

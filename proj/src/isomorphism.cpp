#include "crc/isomorphism.hpp"

#include <algorithm>
#include <map>

#include "crc/error.hpp"

namespace crc {

namespace {

// Vertices 0..n-1 are the first graph, n..2n-1 the second.
class UnionRefiner {
 public:
  UnionRefiner(const Graph& g1, const Graph& g2) : g1_(g1), g2_(g2), n_(g1.vertex_count()) {}

  const std::vector<Vertex>& neighbors(std::size_t v) const {
    return v < n_ ? g1_.neighbors(static_cast<Vertex>(v)) : g2_.neighbors(static_cast<Vertex>(v - n_));
  }
  std::size_t offset(std::size_t v) const { return v < n_ ? 0 : n_; }

  // Relabels colours as ids of sorted signatures until stable. Returns false
  // when some colour class is unbalanced between the two halves.
  bool refine(std::vector<std::uint32_t>& colors) const {
    std::size_t classes = count_classes(colors);
    std::vector<std::pair<std::vector<std::uint32_t>, std::size_t>> sig(2 * n_);
    while (true) {
      for (std::size_t v = 0; v < 2 * n_; ++v) {
        auto& s = sig[v].first;
        s.assign(1, colors[v]);
        const std::size_t off = offset(v);
        for (Vertex w : neighbors(v)) s.push_back(colors[w + off]);
        std::sort(s.begin() + 1, s.end());
        sig[v].second = v;
      }
      std::vector<std::size_t> idx(2 * n_);
      for (std::size_t v = 0; v < idx.size(); ++v) idx[v] = v;
      std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return sig[a].first < sig[b].first; });
      std::uint32_t id = 0;
      for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i > 0 && sig[idx[i]].first != sig[idx[i - 1]].first) ++id;
        colors[idx[i]] = id;
      }
      const std::size_t now = static_cast<std::size_t>(id) + 1;
      if (!balanced(colors)) return false;
      if (now == classes) return true;
      classes = now;
    }
  }

  bool balanced(const std::vector<std::uint32_t>& colors) const {
    std::map<std::uint32_t, long> diff;
    for (std::size_t v = 0; v < 2 * n_; ++v) diff[colors[v]] += v < n_ ? 1 : -1;
    return std::all_of(diff.begin(), diff.end(), [](const auto& kv) { return kv.second == 0; });
  }

  static std::size_t count_classes(const std::vector<std::uint32_t>& colors) {
    std::vector<std::uint32_t> c(colors);
    std::sort(c.begin(), c.end());
    return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
  }

  std::optional<std::vector<Vertex>> search(std::vector<std::uint32_t> colors) const {
    if (!refine(colors)) return std::nullopt;
    std::map<std::uint32_t, std::size_t> size;
    for (std::size_t v = 0; v < n_; ++v) ++size[colors[v]];
    std::uint32_t target = 0;
    std::size_t best = 0;
    for (auto [c, s] : size)
      if (s > 1 && (best == 0 || s < best)) {
        best = s;
        target = c;
      }
    if (best == 0) {
      std::vector<Vertex> image_of_color(2 * n_ + 1);
      for (std::size_t w = n_; w < 2 * n_; ++w) image_of_color[colors[w]] = static_cast<Vertex>(w - n_);
      std::vector<Vertex> map(n_);
      for (std::size_t v = 0; v < n_; ++v) map[v] = image_of_color[colors[v]];
      if (is_isomorphism(g1_, g2_, map)) return map;
      return std::nullopt;
    }
    std::size_t v = 0;
    while (colors[v] != target) ++v;
    const std::uint32_t fresh = *std::max_element(colors.begin(), colors.end()) + 1;
    for (std::size_t w = n_; w < 2 * n_; ++w) {
      if (colors[w] != target) continue;
      std::vector<std::uint32_t> next(colors);
      next[v] = fresh;
      next[w] = fresh;
      if (auto found = search(std::move(next))) return found;
    }
    return std::nullopt;
  }

 private:
  const Graph& g1_;
  const Graph& g2_;
  std::size_t n_;
};

// (degree, edges among neighbours, components among neighbours)
std::vector<std::uint64_t> local_invariants(const Graph& g) {
  std::vector<std::uint64_t> out(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const Graph local = local_graph(g, v);
    const std::uint64_t comps = connected_components(local).size();
    out[v] = (static_cast<std::uint64_t>(g.degree(v)) << 40) | (static_cast<std::uint64_t>(local.edge_count()) << 20) |
             comps;
  }
  return out;
}

}  // namespace

bool is_isomorphism(const Graph& g1, const Graph& g2, std::span<const Vertex> map) {
  const std::size_t n = g1.vertex_count();
  if (g2.vertex_count() != n || map.size() != n || g1.edge_count() != g2.edge_count()) return false;
  std::vector<bool> hit(n, false);
  for (Vertex w : map) {
    if (w >= n || hit[w]) return false;
    hit[w] = true;
  }
  for (auto [u, v] : g1.edges())
    if (!g2.adjacent(map[u], map[v])) return false;
  return true;
}

std::optional<std::vector<Vertex>> graph_isomorphic(const Graph& g1, const Graph& g2,
                                                    std::span<const std::uint32_t> colors1,
                                                    std::span<const std::uint32_t> colors2) {
  const std::size_t n = g1.vertex_count();
  if (std::max(n, g2.vertex_count()) > kMaxIsomorphismVertices)
    throw CapacityError("isomorphism testing is limited to " + std::to_string(kMaxIsomorphismVertices) + " vertices");
  if (colors1.size() != colors2.size() || (!colors1.empty() && colors1.size() != n) ||
      (!colors2.empty() && colors2.size() != g2.vertex_count()))
    throw InputError("vertex colourings must cover both graphs or neither");
  if (g2.vertex_count() != n || g1.edge_count() != g2.edge_count()) return std::nullopt;
  if (n == 0) return std::vector<Vertex>{};

  const auto inv1 = local_invariants(g1);
  const auto inv2 = local_invariants(g2);
  std::map<std::pair<std::uint32_t, std::uint64_t>, std::uint32_t> ids;
  auto key = [&](std::span<const std::uint32_t> colors, const std::vector<std::uint64_t>& inv, std::size_t v) {
    return std::make_pair(colors.empty() ? 0u : colors[v], inv[v]);
  };
  for (std::size_t v = 0; v < n; ++v) {
    ids.emplace(key(colors1, inv1, v), 0);
    ids.emplace(key(colors2, inv2, v), 0);
  }
  std::uint32_t next = 0;
  for (auto& kv : ids) kv.second = next++;
  std::vector<std::uint32_t> colors(2 * n);
  for (std::size_t v = 0; v < n; ++v) {
    colors[v] = ids[key(colors1, inv1, v)];
    colors[n + v] = ids[key(colors2, inv2, v)];
  }
  UnionRefiner refiner(g1, g2);
  if (!refiner.balanced(colors)) return std::nullopt;
  return refiner.search(std::move(colors));
}

namespace {

class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : g_(g) {}

  unsigned run() {
    std::vector<Vertex> all(g_.vertex_count());
    for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
    std::stable_sort(all.begin(), all.end(), [&](Vertex a, Vertex b) { return g_.degree(a) > g_.degree(b); });
    if (!all.empty()) expand(0, all);
    return best_;
  }

 private:
  // Greedy colouring in the given order; vertices listed class by class with
  // bound[i] the number of classes used up to position i.
  void color_sort(const std::vector<Vertex>& p, std::vector<Vertex>& order, std::vector<unsigned>& bound) const {
    std::vector<std::vector<Vertex>> classes;
    for (Vertex v : p) {
      std::size_t k = 0;
      for (; k < classes.size(); ++k) {
        bool clash = false;
        for (Vertex u : classes[k])
          if (g_.adjacent(u, v)) {
            clash = true;
            break;
          }
        if (!clash) break;
      }
      if (k == classes.size()) classes.emplace_back();
      classes[k].push_back(v);
    }
    order.clear();
    bound.clear();
    for (std::size_t k = 0; k < classes.size(); ++k)
      for (Vertex v : classes[k]) {
        order.push_back(v);
        bound.push_back(static_cast<unsigned>(k + 1));
      }
  }

  void expand(unsigned depth, const std::vector<Vertex>& p) {
    std::vector<Vertex> order;
    std::vector<unsigned> bound;
    color_sort(p, order, bound);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (depth + bound[i] <= best_) return;
      const Vertex v = order[i];
      std::vector<Vertex> next;
      for (std::size_t j = 0; j < i; ++j)
        if (g_.adjacent(v, order[j])) next.push_back(order[j]);
      if (next.empty())
        best_ = std::max(best_, depth + 1);
      else
        expand(depth + 1, next);
    }
  }

  const Graph& g_;
  unsigned best_ = 0;
};

}  // namespace

unsigned max_clique(const Graph& g) {
  if (g.vertex_count() > kMaxCliqueVertices)
    throw CapacityError("clique search is limited to " + std::to_string(kMaxCliqueVertices) + " vertices");
  return CliqueSearch(g).run();
}

}  // namespace crc

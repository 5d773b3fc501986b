#include "numfactor/catenary.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "numfactor/detail/union_find.hpp"
#include "numfactor/presentation.hpp"

namespace numfactor {
namespace {

std::vector<std::int64_t> vertex_lengths(const FactorizationSet& zset) {
  std::vector<std::int64_t> lengths;
  lengths.reserve(zset.size());
  for (const auto& z : zset.factorizations()) lengths.push_back(z.length());
  return lengths;
}

std::int64_t pair_distance(const FactorizationSet& zset,
                           const std::vector<std::int64_t>& lengths,
                           std::size_t i, std::size_t j) {
  const auto& a = zset[i].multiplicities();
  const auto& b = zset[j].multiplicities();
  std::int64_t len_meet = 0;
  for (std::size_t t = 0; t < a.size(); ++t) len_meet += std::min(a[t], b[t]);
  return std::max(lengths[i], lengths[j]) - len_meet;
}

std::vector<DistanceGraph::Edge> all_edges(const FactorizationSet& zset) {
  const std::size_t v = zset.size();
  const auto lengths = vertex_lengths(zset);
  std::vector<DistanceGraph::Edge> edges;
  edges.reserve(v * (v - 1) / 2);
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = i + 1; j < v; ++j)
      edges.push_back({static_cast<std::uint32_t>(i),
                       static_cast<std::uint32_t>(j),
                       pair_distance(zset, lengths, i, j)});
  return edges;
}

}  // namespace

DistanceGraph distance_graph(const NumericalMonoid& monoid, std::int64_t n) {
  DistanceGraph graph;
  graph.element = n;
  graph.vertices = factorizations(monoid, n);
  graph.edges = all_edges(*graph.vertices);
  return graph;
}

namespace {

// Kruskal over the materialized edge list: ascend by (weight, a, b), unite
// until one component remains. Fine while |Z(n)| stays moderate.
std::int64_t bottleneck_kruskal(const FactorizationSet& zset) {
  auto edges = all_edges(zset);
  const auto ascending = [](const DistanceGraph::Edge& x, const DistanceGraph::Edge& y) {
    if (x.weight != y.weight) return x.weight < y.weight;
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  };
  // Min-heap; only the edges up to the bottleneck ever get popped.
  const auto heap_cmp = [&](const DistanceGraph::Edge& x, const DistanceGraph::Edge& y) {
    return ascending(y, x);
  };
  std::make_heap(edges.begin(), edges.end(), heap_cmp);

  detail::UnionFind uf(zset.size());
  std::int64_t bottleneck = 0;
  while (uf.component_count() > 1) {
    std::pop_heap(edges.begin(), edges.end(), heap_cmp);
    const DistanceGraph::Edge e = edges.back();
    edges.pop_back();
    if (uf.unite(e.a, e.b)) bottleneck = e.weight;
  }
  return bottleneck;
}

// Dense Prim with O(V) memory for large Z(n): the heaviest edge of a minimum
// spanning tree is the same threshold Kruskal stops at, and the quadratic
// edge list never gets materialized. Multiplicities are flattened into one
// contiguous buffer so the inner distance loop stays in cache.
std::int64_t bottleneck_prim(const FactorizationSet& zset) {
  const std::size_t v = zset.size();
  const std::size_t k = zset[0].size();
  std::vector<std::int64_t> flat(v * k);
  std::vector<std::int64_t> lengths(v);
  for (std::size_t i = 0; i < v; ++i) {
    const auto& m = zset[i].multiplicities();
    std::copy(m.begin(), m.end(), flat.begin() + static_cast<std::ptrdiff_t>(i * k));
    lengths[i] = zset[i].length();
  }

  constexpr std::int64_t kInfinite = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> best(v, kInfinite);
  std::vector<bool> in_tree(v, false);
  best[0] = 0;
  std::int64_t bottleneck = 0;
  for (std::size_t round = 0; round < v; ++round) {
    std::size_t u = v;
    for (std::size_t i = 0; i < v; ++i)
      if (!in_tree[i] && (u == v || best[i] < best[u])) u = i;
    in_tree[u] = true;
    bottleneck = std::max(bottleneck, best[u]);

    const std::int64_t* zu = flat.data() + u * k;
    for (std::size_t w = 0; w < v; ++w) {
      if (in_tree[w]) continue;
      const std::int64_t* zw = flat.data() + w * k;
      std::int64_t len_meet = 0;
      for (std::size_t t = 0; t < k; ++t) len_meet += std::min(zu[t], zw[t]);
      const std::int64_t d = std::max(lengths[u], lengths[w]) - len_meet;
      if (d < best[w]) best[w] = d;
    }
  }
  return bottleneck;
}

}  // namespace

std::int64_t catenary_degree(const NumericalMonoid& monoid, std::int64_t n) {
  const auto zset = factorizations(monoid, n);
  const std::size_t v = zset->size();
  if (v <= 1) return 0;
  if (v <= 1024) return bottleneck_kruskal(*zset);
  return bottleneck_prim(*zset);
}

std::optional<Chain> n_chain(const NumericalMonoid& monoid, std::int64_t n,
                             const Factorization& from, const Factorization& to,
                             std::int64_t max_link) {
  const auto zset = factorizations(monoid, n);
  const auto source = zset->index_of(from);
  const auto target = zset->index_of(to);
  if (!source || !target)
    throw_error(Errc::NotAFactorization,
                "endpoint does not factor " + std::to_string(n));

  if (*source == *target) return Chain{{from}, {}};

  const std::size_t v = zset->size();
  const auto lengths = vertex_lengths(*zset);
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(v, kUnvisited);
  parent[*source] = *source;
  std::deque<std::size_t> queue{*source};
  while (!queue.empty() && parent[*target] == kUnvisited) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t w = 0; w < v; ++w) {
      if (w == u || parent[w] != kUnvisited) continue;
      if (pair_distance(*zset, lengths, u, w) > max_link) continue;
      parent[w] = u;
      queue.push_back(w);
    }
  }
  if (parent[*target] == kUnvisited) return std::nullopt;

  std::vector<std::size_t> path{*target};
  while (path.back() != *source) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());

  Chain chain;
  for (std::size_t idx : path) chain.links.push_back((*zset)[idx]);
  for (std::size_t i = 1; i < path.size(); ++i)
    chain.link_lengths.push_back(
        pair_distance(*zset, lengths, path[i - 1], path[i]));
  return chain;
}

std::int64_t catenary_degree_monoid(const NumericalMonoid& monoid) {
  std::int64_t best = 0;
  for (std::int64_t b : betti_elements(monoid))
    best = std::max(best, catenary_degree(monoid, b));
  return best;
}

}  // namespace numfactor

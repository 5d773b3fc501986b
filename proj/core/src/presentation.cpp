#include "numfactor/presentation.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "numfactor/detail/union_find.hpp"

namespace numfactor {
namespace {

bool shares_support(const Factorization& a, const Factorization& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) return true;
  return false;
}

// Component labels normalized to 0..count-1 in order of first appearance.
std::pair<std::vector<std::uint32_t>, std::uint32_t> normalize_components(
    detail::UnionFind& uf, std::size_t n) {
  std::vector<std::uint32_t> label(n);
  std::vector<std::size_t> root_to_label(n, n);
  std::uint32_t next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t root = uf.find(i);
    if (root_to_label[root] == n) root_to_label[root] = next++;
    label[i] = static_cast<std::uint32_t>(root_to_label[root]);
  }
  return {std::move(label), next};
}

std::vector<std::int64_t> difference(const Factorization& z, const Factorization& m) {
  std::vector<std::int64_t> diff(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) diff[i] = z[i] - m[i];
  return diff;
}

}  // namespace

std::vector<std::vector<std::uint32_t>> BettiGraph::components() const {
  std::vector<std::vector<std::uint32_t>> groups(component_count);
  for (std::uint32_t v = 0; v < component_of.size(); ++v)
    groups[component_of[v]].push_back(v);
  return groups;
}

BettiGraph betti_graph(const NumericalMonoid& monoid, std::int64_t n) {
  BettiGraph graph;
  graph.element = n;
  graph.vertices = factorizations(monoid, n);
  const auto& zs = graph.vertices->factorizations();

  detail::UnionFind uf(zs.size());
  for (std::size_t i = 0; i < zs.size(); ++i)
    for (std::size_t j = i + 1; j < zs.size(); ++j)
      if (shares_support(zs[i], zs[j])) {
        graph.edges.emplace_back(static_cast<std::uint32_t>(i),
                                 static_cast<std::uint32_t>(j));
        uf.unite(i, j);
      }
  auto [labels, count] = normalize_components(uf, zs.size());
  graph.component_of = std::move(labels);
  graph.component_count = count;
  return graph;
}

std::vector<std::int64_t> betti_candidates(const NumericalMonoid& monoid,
                                           std::size_t seed_atom) {
  const auto& gens = monoid.generators();
  if (seed_atom >= gens.size())
    throw_error(Errc::BadAtomIndex,
                "seed atom index " + std::to_string(seed_atom) + " out of range");
  const AperySet ap = monoid.apery_set(gens[seed_atom]);
  std::set<std::int64_t> pool;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i == seed_atom) continue;
    for (std::int64_t w : ap.elements)
      if (w != 0) pool.insert(gens[i] + w);
  }
  return {pool.begin(), pool.end()};
}

std::vector<std::int64_t> betti_elements(const NumericalMonoid& monoid,
                                         std::size_t seed_atom) {
  std::vector<std::int64_t> result;
  for (std::int64_t candidate : betti_candidates(monoid, seed_atom))
    if (!betti_graph(monoid, candidate).connected()) result.push_back(candidate);
  return result;
}

std::vector<Relation> Presentation::relations_for(std::int64_t element) const {
  std::vector<Relation> out;
  for (const auto& rel : relations)
    if (rel.element == element) out.push_back(rel);
  return out;
}

Presentation minimal_presentation(const NumericalMonoid& monoid) {
  Presentation presentation;
  for (std::int64_t betti : betti_elements(monoid)) {
    const BettiGraph graph = betti_graph(monoid, betti);
    const auto& zs = graph.vertices->factorizations();

    // First vertex of each component in canonical order is its representative;
    // the star is anchored at the component of the canonically last vertex,
    // which is the lexicographically smallest factorization.
    std::vector<std::size_t> representative(graph.component_count, zs.size());
    for (std::size_t v = 0; v < zs.size(); ++v) {
      auto& slot = representative[graph.component_of[v]];
      if (slot == zs.size()) slot = v;
    }
    const std::uint32_t anchor = graph.component_of[zs.size() - 1];

    for (std::uint32_t c = 0; c < graph.component_count; ++c) {
      if (c == anchor) continue;
      presentation.relations.push_back(
          Relation{zs[representative[c]], zs[representative[anchor]], betti});
    }
  }
  return presentation;
}

std::uint64_t count_minimal_presentations(const NumericalMonoid& monoid) {
  std::uint64_t total = 1;
  for (std::int64_t betti : betti_elements(monoid)) {
    const BettiGraph graph = betti_graph(monoid, betti);
    const auto groups = graph.components();
    const std::uint64_t c = groups.size();
    // Spanning trees over c blocks where an edge between blocks of sizes
    // s, t can be realized st ways: N^(c-2) * prod(sizes), N = total vertices.
    std::uint64_t ways = 1;
    for (const auto& g : groups) ways *= g.size();
    const std::uint64_t n = graph.vertices->size();
    for (std::uint64_t e = 2; e < c; ++e) ways *= n;
    total *= ways;
  }
  return total;
}

FactorizationGraph factorization_graph(const NumericalMonoid& monoid,
                                       std::int64_t n,
                                       const Presentation& relations) {
  FactorizationGraph graph;
  graph.element = n;
  graph.vertices = factorizations(monoid, n);
  const auto& zs = graph.vertices->factorizations();

  detail::UnionFind uf(zs.size());
  for (std::size_t i = 0; i < zs.size(); ++i) {
    for (std::size_t j = i + 1; j < zs.size(); ++j) {
      const Factorization common = meet(zs[i], zs[j]);
      const auto left = difference(zs[i], common);
      const auto right = difference(zs[j], common);
      const bool related = std::any_of(
          relations.relations.begin(), relations.relations.end(),
          [&](const Relation& rel) {
            return (rel.left.multiplicities() == left &&
                    rel.right.multiplicities() == right) ||
                   (rel.left.multiplicities() == right &&
                    rel.right.multiplicities() == left);
          });
      if (related) {
        graph.edges.emplace_back(static_cast<std::uint32_t>(i),
                                 static_cast<std::uint32_t>(j));
        uf.unite(i, j);
      }
    }
  }
  graph.component_count = static_cast<std::uint32_t>(uf.component_count());
  return graph;
}

}  // namespace numfactor

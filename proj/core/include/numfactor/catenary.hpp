#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "numfactor/factorization.hpp"

namespace numfactor {

/// Complete weighted graph on Z(n): one vertex per factorization (canonical
/// order), every unordered pair joined by an edge weighted with their distance.
struct DistanceGraph {
  struct Edge {
    std::uint32_t a = 0;  // vertex indices into vertices->factorizations()
    std::uint32_t b = 0;
    std::int64_t weight = 0;
  };

  std::int64_t element = 0;
  std::shared_ptr<const FactorizationSet> vertices;
  std::vector<Edge> edges;  // all pairs a < b, ordered by (a, b)
};

DistanceGraph distance_graph(const NumericalMonoid& monoid, std::int64_t n);

/// Chain z₀,…,z_t of factorizations of one element; link_lengths[i-1] is
/// d(z_{i−1}, zᵢ), so it has one entry less than links.
struct Chain {
  std::vector<Factorization> links;
  std::vector<std::int64_t> link_lengths;
};

/// c(n): least N whose threshold subgraph of the distance graph is connected;
/// 0 when the factorization is unique. Kruskal-style: edges are merged in
/// ascending (weight, a, b) order and the last uniting weight is the
/// bottleneck, which equals the reverse-delete answer.
std::int64_t catenary_degree(const NumericalMonoid& monoid, std::int64_t n);

/// A chain from `from` to `to` whose every link is at most max_link, or
/// nullopt when none exists. BFS over the thresholded distance graph with
/// neighbors taken in canonical vertex order, so the witness is simple and
/// deterministic. Throws NotAFactorization when an endpoint is not in Z(n).
std::optional<Chain> n_chain(const NumericalMonoid& monoid, std::int64_t n,
                             const Factorization& from, const Factorization& to,
                             std::int64_t max_link);

/// c(S) = max c(n) over the Betti elements; 0 when there are none.
std::int64_t catenary_degree_monoid(const NumericalMonoid& monoid);

}  // namespace numfactor

#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "numfactor/factorization.hpp"

namespace numfactor {

/// Graph on Z(n) joining factorizations that share at least one atom.
/// n is a Betti element exactly when this graph is disconnected.
struct BettiGraph {
  std::int64_t element = 0;
  std::shared_ptr<const FactorizationSet> vertices;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // a < b
  std::vector<std::uint32_t> component_of;  // labels 0..count-1 by first vertex
  std::uint32_t component_count = 0;

  bool connected() const { return component_count <= 1; }
  /// Vertex indices grouped by component, each group ascending.
  std::vector<std::vector<std::uint32_t>> components() const;
};

BettiGraph betti_graph(const NumericalMonoid& monoid, std::int64_t n);

/// Candidate pool {nᵢ + w : i ≠ seed_atom, w ∈ Ap(S, n_seed)∖{0}},
/// deduplicated and sorted. Every Betti element is in the pool, but not
/// every pool member is Betti — filter with betti_graph.
std::vector<std::int64_t> betti_candidates(const NumericalMonoid& monoid,
                                           std::size_t seed_atom = 0);

/// The Betti elements: pool members whose Betti graph is disconnected.
std::vector<std::int64_t> betti_elements(const NumericalMonoid& monoid,
                                         std::size_t seed_atom = 0);

/// A trade: two distinct factorizations of the same element.
struct Relation {
  Factorization left;
  Factorization right;
  std::int64_t element = 0;
};

/// Relation set indexed by the Betti element each relation resolves.
struct Presentation {
  std::vector<Relation> relations;  // ascending by element
  std::vector<Relation> relations_for(std::int64_t element) const;
};

/// One canonical minimal presentation. Per Betti element, each component of
/// the Betti graph is represented by its first factorization in canonical
/// order, and every representative is joined to the representative of the
/// component holding the lexicographically smallest factorization (a star).
/// Any other bridging choice would be equally valid; this one is pinned for
/// deterministic output.
Presentation minimal_presentation(const NumericalMonoid& monoid);

/// How many distinct minimal presentations the monoid admits, counting the
/// ways to bridge Betti-graph components: spanning trees over components
/// weighted by component sizes, multiplied across Betti elements.
std::uint64_t count_minimal_presentations(const NumericalMonoid& monoid);

/// Graph on Z(n) with an edge where one relation applies after removing the
/// common part: z₁ − (z₁∧z₂) and z₂ − (z₁∧z₂) match some relation's sides.
struct FactorizationGraph {
  std::int64_t element = 0;
  std::shared_ptr<const FactorizationSet> vertices;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // a < b
  std::uint32_t component_count = 0;

  bool connected() const { return component_count <= 1; }
};

FactorizationGraph factorization_graph(const NumericalMonoid& monoid,
                                       std::int64_t n,
                                       const Presentation& relations);

}  // namespace numfactor

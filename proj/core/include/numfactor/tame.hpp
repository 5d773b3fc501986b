#pragma once

#include <cstdint>
#include <vector>

#include "numfactor/factorization.hpp"

namespace numfactor {

/// t(n, nᵢ) per atom plus the overall t(n) = max over atoms.
struct TameReport {
  std::int64_t element = 0;
  std::vector<std::int64_t> per_atom;
  std::int64_t overall = 0;
};

/// t(n, nᵢ): 0 when n − nᵢ is not in the monoid; otherwise the worst case,
/// over factorizations z of n, of the least distance from z to a
/// factorization using atom nᵢ (z itself counts when it already does).
/// atom is a zero-based generator index; throws BadAtomIndex.
std::int64_t tame_wrt(const NumericalMonoid& monoid, std::int64_t n,
                      std::size_t atom);

TameReport tame_report(const NumericalMonoid& monoid, std::int64_t n);

/// t(n) = max over atoms of t(n, nᵢ).
std::int64_t tame_degree(const NumericalMonoid& monoid, std::int64_t n);

/// Candidate maximizers {nᵢ + w : i ≠ j, w ∈ Ap(S, nⱼ)} over all ordered
/// generator pairs, deduplicated and sorted. t(S) is attained on this set.
std::vector<std::int64_t> tame_candidates(const NumericalMonoid& monoid);

/// t(S): max of tame_degree over the candidate set. Candidates with a unique
/// factorization are skipped without any distance work.
std::int64_t tame_degree_monoid(const NumericalMonoid& monoid);

}  // namespace numfactor

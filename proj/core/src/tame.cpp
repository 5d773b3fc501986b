#include "numfactor/tame.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace numfactor {

std::int64_t tame_wrt(const NumericalMonoid& monoid, std::int64_t n,
                      std::size_t atom) {
  if (atom >= monoid.atom_count())
    throw_error(Errc::BadAtomIndex,
                "atom index " + std::to_string(atom) + " out of range");
  if (!monoid.contains(n))
    throw_error(Errc::NotAnElement,
                std::to_string(n) + " is not an element of the monoid");
  if (!monoid.contains(n - monoid.generators()[atom])) return 0;

  const auto zset = factorizations(monoid, n);
  std::vector<std::size_t> with_atom;
  for (std::size_t i = 0; i < zset->size(); ++i)
    if ((*zset)[i][atom] != 0) with_atom.push_back(i);

  std::int64_t worst = 0;
  for (std::size_t i = 0; i < zset->size(); ++i) {
    if ((*zset)[i][atom] != 0) continue;  // z itself qualifies, distance 0
    std::int64_t best = -1;
    for (std::size_t j : with_atom) {
      const std::int64_t d = distance((*zset)[i], (*zset)[j]);
      if (best < 0 || d < best) best = d;
    }
    worst = std::max(worst, best);
  }
  return worst;
}

TameReport tame_report(const NumericalMonoid& monoid, std::int64_t n) {
  TameReport report;
  report.element = n;
  report.per_atom.reserve(monoid.atom_count());
  for (std::size_t i = 0; i < monoid.atom_count(); ++i) {
    report.per_atom.push_back(tame_wrt(monoid, n, i));
    report.overall = std::max(report.overall, report.per_atom.back());
  }
  return report;
}

std::int64_t tame_degree(const NumericalMonoid& monoid, std::int64_t n) {
  return tame_report(monoid, n).overall;
}

std::vector<std::int64_t> tame_candidates(const NumericalMonoid& monoid) {
  const auto& gens = monoid.generators();
  std::set<std::int64_t> pool;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    const AperySet ap = monoid.apery_set(gens[j]);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (i == j) continue;
      for (std::int64_t w : ap.elements) pool.insert(gens[i] + w);
    }
  }
  return {pool.begin(), pool.end()};
}

std::int64_t tame_degree_monoid(const NumericalMonoid& monoid) {
  std::int64_t best = 0;
  for (std::int64_t candidate : tame_candidates(monoid)) {
    if (factorizations(monoid, candidate)->size() <= 1) continue;
    best = std::max(best, tame_degree(monoid, candidate));
  }
  return best;
}

}  // namespace numfactor

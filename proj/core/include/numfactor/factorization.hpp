#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "numfactor/monoid.hpp"
#include "numfactor/rational.hpp"

namespace numfactor {

/// Multiplicity vector (x₁,…,x_k) aligned to a monoid's generator list:
/// entry i counts copies of the i-th atom. Value semantics, no monoid handle.
class Factorization {
 public:
  Factorization() = default;
  explicit Factorization(std::vector<std::int64_t> multiplicities);
  static Factorization zero(std::size_t k) {
    return Factorization(std::vector<std::int64_t>(k, 0));
  }

  std::size_t size() const { return counts_.size(); }
  std::int64_t operator[](std::size_t i) const { return counts_[i]; }
  const std::vector<std::int64_t>& multiplicities() const { return counts_; }

  /// |z|: number of atoms used, with repetition.
  std::int64_t length() const;

  /// Zero-based indices of the nonzero multiplicities.
  std::vector<std::size_t> support() const;

  /// Σ xᵢnᵢ over the given monoid's generators. Throws DimensionMismatch.
  std::int64_t value(const NumericalMonoid& monoid) const;

  friend bool operator==(const Factorization& a, const Factorization& b) {
    return a.counts_ == b.counts_;
  }
  friend bool operator!=(const Factorization& a, const Factorization& b) {
    return !(a == b);
  }

 private:
  std::vector<std::int64_t> counts_;
};

/// Plain ascending lexicographic order on multiplicity vectors.
bool lex_less(const Factorization& a, const Factorization& b);

/// Canonical listing order: lexicographically descending, so (10,0,0) comes
/// first and (0,0,3) last in Z(60). All FactorizationSet output uses it.
struct CanonicalLess {
  bool operator()(const Factorization& a, const Factorization& b) const {
    return lex_less(b, a);
  }
};

/// z₁ ∧ z₂: componentwise minimum. Throws DimensionMismatch.
Factorization meet(const Factorization& a, const Factorization& b);

/// d(z₁,z₂) = max(|z₁|,|z₂|) − |z₁∧z₂|. Throws DimensionMismatch.
std::int64_t distance(const Factorization& a, const Factorization& b);

/// "(3,0,0)" style rendering, mostly for diagnostics.
std::string to_string(const Factorization& z);

/// The complete set Z(n), canonically ordered.
class FactorizationSet {
 public:
  FactorizationSet(std::int64_t element, std::vector<Factorization> factorizations)
      : element_(element), factorizations_(std::move(factorizations)) {}

  std::int64_t element() const { return element_; }
  const std::vector<Factorization>& factorizations() const { return factorizations_; }
  std::size_t size() const { return factorizations_.size(); }
  const Factorization& operator[](std::size_t i) const { return factorizations_[i]; }

  std::optional<std::size_t> index_of(const Factorization& z) const;
  bool contains(const Factorization& z) const { return index_of(z).has_value(); }

 private:
  std::int64_t element_;
  std::vector<Factorization> factorizations_;  // canonical order
};

/// Enumerates Z(n). Complete and duplicate-free; Z(0) = {zero vector}.
/// Results are cached per monoid (LRU, internally synchronized).
/// Throws NotAnElement when n is not in the monoid.
std::shared_ptr<const FactorizationSet> factorizations(const NumericalMonoid& monoid,
                                                       std::int64_t n);

/// Length invariants of one Z(n): the sorted distinct lengths, extremes,
/// exact elasticity, and the delta set of gaps.
struct LengthProfile {
  std::vector<std::int64_t> lengths;  // sorted distinct
  std::int64_t min_length = 0;       // ℓ(n)
  std::int64_t max_length = 0;       // L(n)
  Rational elasticity;               // L(n)/ℓ(n); defined as 1 for n = 0
  std::vector<std::int64_t> delta;   // sorted gaps between consecutive lengths
};

LengthProfile length_profile(const FactorizationSet& zset);

/// ρ(S) = max generator / min generator, as an exact reduced fraction.
Rational monoid_elasticity(const NumericalMonoid& monoid);

/// Δ(n), convenience over length_profile(*factorizations(...)).delta.
std::vector<std::int64_t> delta_set(const NumericalMonoid& monoid, std::int64_t n);

}  // namespace numfactor

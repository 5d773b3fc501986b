#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "numfactor/detail/zcache.hpp"
#include "numfactor/errors.hpp"

namespace numfactor {

/// Apéry set of a nonzero element m: entry r is the minimum element of the
/// monoid congruent to r mod m. Always has exactly m entries and entry 0 is 0.
struct AperySet {
  std::int64_t modulus = 0;
  std::vector<std::int64_t> elements;  // indexed by residue class
};

/// A numerical monoid ⟨n₁,…,n_k⟩: all nonnegative integer combinations of a
/// coprime generator list. Construction sorts the input, removes duplicates,
/// discards non-minimal generators, and precomputes the Frobenius number and
/// a membership table. Immutable afterwards; copies are cheap handles onto
/// shared state and safe for concurrent reads.
class NumericalMonoid {
 public:
  /// Largest accepted generator; keeps the membership table desk-sized.
  static constexpr std::int64_t kMaxGenerator = 1 << 20;
  static constexpr std::size_t kDefaultCacheCapacity = 4096;

  /// Throws EmptyGenerators, InvalidGenerator, GeneratorTooLarge or GcdNotOne.
  /// A generator list reducing to {1} yields the trivial monoid ℕ₀ with
  /// Frobenius number −1.
  explicit NumericalMonoid(const std::vector<std::int64_t>& raw_generators,
                           std::size_t cache_capacity = kDefaultCacheCapacity);

  /// Minimal generators (the atoms), strictly increasing.
  const std::vector<std::int64_t>& generators() const { return state_->generators; }

  /// Input values dropped at construction because they are representable by
  /// smaller generators; ascending, duplicates removed.
  const std::vector<std::int64_t>& discarded() const { return state_->discarded; }

  std::size_t atom_count() const { return state_->generators.size(); }
  std::int64_t min_generator() const { return state_->generators.front(); }
  std::int64_t max_generator() const { return state_->generators.back(); }

  /// Largest integer not in the monoid; −1 for ℕ₀.
  std::int64_t frobenius() const { return state_->frobenius; }

  /// True iff n is a nonnegative integer combination of the generators.
  /// Table lookup below frobenius() + max_generator(), constant true beyond.
  bool contains(std::int64_t n) const {
    if (n < 0) return false;
    if (n > state_->frobenius) return true;
    return state_->membership[static_cast<std::size_t>(n)];
  }

  /// Apéry set of m. Throws NotAnElement when m = 0 or m is not in the monoid.
  AperySet apery_set(std::int64_t m) const;

  /// lcm of the generators; throws Overflow if it does not fit 64 bits.
  std::int64_t lcm_generators() const;

  /// Zero-based position of an atom given by value. Throws BadAtomIndex.
  std::size_t atom_index(std::int64_t atom_value) const;

  friend bool operator==(const NumericalMonoid& a, const NumericalMonoid& b) {
    return a.state_ == b.state_ || a.state_->generators == b.state_->generators;
  }
  friend bool operator!=(const NumericalMonoid& a, const NumericalMonoid& b) {
    return !(a == b);
  }

  const detail::ZCache& factorization_cache() const { return state_->cache; }

 private:
  struct State {
    std::vector<std::int64_t> generators;
    std::vector<std::int64_t> discarded;
    std::int64_t frobenius = -1;
    std::vector<bool> membership;  // covers [0, frobenius + max generator]
    detail::ZCache cache;

    explicit State(std::size_t cache_capacity) : cache(cache_capacity) {}
  };

  std::shared_ptr<const State> state_;
};

}  // namespace numfactor

#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "numfactor/factorization.hpp"

namespace numfactor {

/// Per-element invariants that can be scanned along the monoid.
enum class Invariant { Catenary, Tame, Delta, MaxLength, MinLength };

const char* invariant_name(Invariant invariant);

/// Scan values are integers except for delta sets, which are sorted vectors.
using ScanValue = std::variant<std::int64_t, std::vector<std::int64_t>>;

/// The chosen invariant evaluated at every element of S up to scanned_to,
/// ascending. elements[i] pairs with values[i].
struct InvariantSeries {
  Invariant invariant = Invariant::Catenary;
  std::int64_t scanned_to = 0;
  std::vector<std::int64_t> elements;
  std::vector<ScanValue> values;

  /// Value at an element of the scan; throws NotAnElement otherwise.
  const ScanValue& value_at(std::int64_t n) const;
};

/// Evaluates the invariant on every element of S up to up_to. Elements are
/// partitioned over a worker pool (threads = 0 picks hardware concurrency);
/// output order is by element regardless. Throws RangeTooSmall when up_to
/// does not reach frobenius + 1.
InvariantSeries scan(const NumericalMonoid& monoid, Invariant invariant,
                     std::int64_t up_to, unsigned threads = 0);

/// Verified eventual periodicity of a scanned sequence. The evidence is the
/// finite window [onset, verified_through]; nothing beyond it is claimed.
struct PeriodicityResult {
  std::string invariant_name;
  std::int64_t onset = 0;             // smallest element where periodicity holds
  std::int64_t period = 0;            // smallest working divisor of the lcm
  std::int64_t verified_through = 0;  // last element checked
  InvariantSeries sequence;
  /// Convenience: the value at onset (the constant when period divides 1 gap).
  const ScanValue& value_at_onset() const { return sequence.value_at(onset); }
};

/// Finds the smallest divisor p of lcm and then the smallest onset m such
/// that seq(n) = seq(n + p) for every element n in [m, scanned_to − p].
/// A candidate only counts when at least guard·lcm of sequence lies past the
/// onset; otherwise the next divisor is tried. Throws WindowTooShort when no
/// divisor is verifiably periodic within the window — the scan must be
/// extended rather than guessed at.
PeriodicityResult detect_period(const InvariantSeries& sequence, std::int64_t lcm,
                                std::int64_t guard = 2);

}  // namespace numfactor

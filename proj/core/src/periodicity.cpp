#include "numfactor/periodicity.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "numfactor/catenary.hpp"
#include "numfactor/tame.hpp"

namespace numfactor {
namespace {

ScanValue evaluate(const NumericalMonoid& monoid, Invariant invariant,
                   std::int64_t n) {
  switch (invariant) {
    case Invariant::Catenary:
      return catenary_degree(monoid, n);
    case Invariant::Tame:
      return tame_degree(monoid, n);
    case Invariant::Delta:
      return length_profile(*factorizations(monoid, n)).delta;
    case Invariant::MaxLength:
      return length_profile(*factorizations(monoid, n)).max_length;
    case Invariant::MinLength:
      return length_profile(*factorizations(monoid, n)).min_length;
  }
  throw std::logic_error("unreachable");
}

std::vector<std::int64_t> sorted_divisors(std::int64_t n) {
  std::vector<std::int64_t> divisors;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    divisors.push_back(d);
    if (d != n / d) divisors.push_back(n / d);
  }
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

}  // namespace

const char* invariant_name(Invariant invariant) {
  switch (invariant) {
    case Invariant::Catenary: return "catenary";
    case Invariant::Tame: return "tame";
    case Invariant::Delta: return "delta";
    case Invariant::MaxLength: return "maxlen";
    case Invariant::MinLength: return "minlen";
  }
  return "unknown";
}

const ScanValue& InvariantSeries::value_at(std::int64_t n) const {
  const auto it = std::lower_bound(elements.begin(), elements.end(), n);
  if (it == elements.end() || *it != n)
    throw_error(Errc::NotAnElement,
                std::to_string(n) + " is not in the scanned sequence");
  return values[static_cast<std::size_t>(it - elements.begin())];
}

InvariantSeries scan(const NumericalMonoid& monoid, Invariant invariant,
                     std::int64_t up_to, unsigned threads) {
  if (up_to < monoid.frobenius() + 1)
    throw_error(Errc::RangeTooSmall,
                "scan range " + std::to_string(up_to) +
                    " does not reach frobenius + 1 = " +
                    std::to_string(monoid.frobenius() + 1));

  InvariantSeries series;
  series.invariant = invariant;
  series.scanned_to = up_to;
  for (std::int64_t n = 0; n <= up_to; ++n)
    if (monoid.contains(n)) series.elements.push_back(n);
  series.values.resize(series.elements.size());

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(series.elements.size()) + 1);

  if (threads <= 1 || series.elements.size() < 2) {
    for (std::size_t i = 0; i < series.elements.size(); ++i)
      series.values[i] = evaluate(monoid, invariant, series.elements[i]);
    return series;
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= series.elements.size()) return;
      series.values[i] = evaluate(monoid, invariant, series.elements[i]);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return series;
}

PeriodicityResult detect_period(const InvariantSeries& sequence, std::int64_t lcm,
                                std::int64_t guard) {
  if (lcm < 1) throw std::invalid_argument("detect_period: lcm must be positive");
  if (guard < 2) throw std::invalid_argument("detect_period: guard must be >= 2");
  if (sequence.elements.empty())
    throw_error(Errc::WindowTooShort, "empty sequence");

  const auto& elems = sequence.elements;
  const std::int64_t end = sequence.scanned_to;
  if (end - elems.front() < guard * lcm)
    throw_error(Errc::WindowTooShort,
                "window of " + std::to_string(end - elems.front()) +
                    " cannot hold guard*lcm = " + std::to_string(guard * lcm));

  const auto value_of = [&](std::int64_t n) -> const ScanValue* {
    const auto it = std::lower_bound(elems.begin(), elems.end(), n);
    if (it == elems.end() || *it != n) return nullptr;
    return &sequence.values[static_cast<std::size_t>(it - elems.begin())];
  };

  for (std::int64_t p : sorted_divisors(lcm)) {
    // Locate the last element violating p-periodicity; a missing n + p that
    // should carry a value counts as a violation.
    std::int64_t last_violation = -1;
    bool any_pair = false;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      const std::int64_t n = elems[i];
      if (n + p > end) break;
      any_pair = true;
      const ScanValue* shifted = value_of(n + p);
      if (shifted == nullptr || !(*shifted == sequence.values[i]))
        last_violation = n;
    }
    if (!any_pair) continue;

    std::int64_t onset;
    if (last_violation < 0) {
      onset = elems.front();
    } else {
      const auto it = std::upper_bound(elems.begin(), elems.end(), last_violation);
      if (it == elems.end()) continue;  // violations run to the very end
      onset = *it;
    }
    if (end - onset < guard * lcm) continue;  // not enough evidence past onset

    PeriodicityResult result;
    result.invariant_name = invariant_name(sequence.invariant);
    result.onset = onset;
    result.period = p;
    result.verified_through = end;
    result.sequence = sequence;
    return result;
  }
  throw_error(Errc::WindowTooShort,
              "no divisor of " + std::to_string(lcm) +
                  " is verifiably periodic with guard " + std::to_string(guard) +
                  " in the scanned window; extend the scan");
}

}  // namespace numfactor

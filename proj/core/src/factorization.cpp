#include "numfactor/factorization.hpp"

#include <algorithm>
#include <stdexcept>

namespace numfactor {

Factorization::Factorization(std::vector<std::int64_t> multiplicities)
    : counts_(std::move(multiplicities)) {
  for (std::int64_t x : counts_)
    if (x < 0)
      throw std::invalid_argument("Factorization: negative multiplicity");
}

std::int64_t Factorization::length() const {
  std::int64_t total = 0;
  for (std::int64_t x : counts_) total += x;
  return total;
}

std::vector<std::size_t> Factorization::support() const {
  std::vector<std::size_t> indices;
  for (std::size_t i = 0; i < counts_.size(); ++i)
    if (counts_[i] != 0) indices.push_back(i);
  return indices;
}

std::int64_t Factorization::value(const NumericalMonoid& monoid) const {
  const auto& gens = monoid.generators();
  if (gens.size() != counts_.size())
    throw_error(Errc::DimensionMismatch,
                "factorization has " + std::to_string(counts_.size()) +
                    " entries, monoid has " + std::to_string(gens.size()) +
                    " atoms");
  std::int64_t total = 0;
  for (std::size_t i = 0; i < counts_.size(); ++i) total += counts_[i] * gens[i];
  return total;
}

bool lex_less(const Factorization& a, const Factorization& b) {
  return std::lexicographical_compare(a.multiplicities().begin(),
                                      a.multiplicities().end(),
                                      b.multiplicities().begin(),
                                      b.multiplicities().end());
}

Factorization meet(const Factorization& a, const Factorization& b) {
  if (a.size() != b.size())
    throw_error(Errc::DimensionMismatch, "meet of different-length factorizations");
  std::vector<std::int64_t> mins(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) mins[i] = std::min(a[i], b[i]);
  return Factorization(std::move(mins));
}

std::int64_t distance(const Factorization& a, const Factorization& b) {
  if (a.size() != b.size())
    throw_error(Errc::DimensionMismatch,
                "distance of different-length factorizations");
  std::int64_t len_a = 0, len_b = 0, len_meet = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    len_a += a[i];
    len_b += b[i];
    len_meet += std::min(a[i], b[i]);
  }
  return std::max(len_a, len_b) - len_meet;
}

std::string to_string(const Factorization& z) {
  std::string out = "(";
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(z[i]);
  }
  out += ")";
  return out;
}

std::optional<std::size_t> FactorizationSet::index_of(const Factorization& z) const {
  const auto it = std::lower_bound(factorizations_.begin(), factorizations_.end(),
                                   z, CanonicalLess{});
  if (it == factorizations_.end() || !(*it == z)) return std::nullopt;
  return static_cast<std::size_t>(it - factorizations_.begin());
}

namespace {

// Recursive descent from the largest atom down. The last atom only divides,
// everything else ranges over 0..remaining/nᵢ.
void enumerate(const std::vector<std::int64_t>& gens, std::size_t atom,
               std::int64_t remaining, std::vector<std::int64_t>& current,
               std::vector<Factorization>& out) {
  if (atom == 0) {
    if (remaining % gens[0] == 0) {
      current[0] = remaining / gens[0];
      out.emplace_back(current);
    }
    return;
  }
  for (std::int64_t x = remaining / gens[atom]; x >= 0; --x) {
    current[atom] = x;
    enumerate(gens, atom - 1, remaining - x * gens[atom], current, out);
  }
}

}  // namespace

std::shared_ptr<const FactorizationSet> factorizations(const NumericalMonoid& monoid,
                                                       std::int64_t n) {
  if (!monoid.contains(n))
    throw_error(Errc::NotAnElement,
                std::to_string(n) + " is not an element of the monoid");
  if (auto cached = monoid.factorization_cache().get(n)) return cached;

  const auto& gens = monoid.generators();
  std::vector<Factorization> all;
  std::vector<std::int64_t> current(gens.size(), 0);
  enumerate(gens, gens.size() - 1, n, current, all);
  std::sort(all.begin(), all.end(), CanonicalLess{});

  auto result = std::make_shared<const FactorizationSet>(n, std::move(all));
  monoid.factorization_cache().put(n, result);
  return result;
}

LengthProfile length_profile(const FactorizationSet& zset) {
  if (zset.size() == 0)
    throw std::invalid_argument("length_profile: empty factorization set");
  LengthProfile profile;
  profile.lengths.reserve(zset.size());
  for (const auto& z : zset.factorizations()) profile.lengths.push_back(z.length());
  std::sort(profile.lengths.begin(), profile.lengths.end());
  profile.lengths.erase(std::unique(profile.lengths.begin(), profile.lengths.end()),
                        profile.lengths.end());
  profile.min_length = profile.lengths.front();
  profile.max_length = profile.lengths.back();
  profile.elasticity = profile.min_length == 0
                           ? Rational(1, 1)
                           : Rational(profile.max_length, profile.min_length);
  for (std::size_t i = 1; i < profile.lengths.size(); ++i)
    profile.delta.push_back(profile.lengths[i] - profile.lengths[i - 1]);
  std::sort(profile.delta.begin(), profile.delta.end());
  profile.delta.erase(std::unique(profile.delta.begin(), profile.delta.end()),
                      profile.delta.end());
  return profile;
}

Rational monoid_elasticity(const NumericalMonoid& monoid) {
  return Rational(monoid.max_generator(), monoid.min_generator());
}

std::vector<std::int64_t> delta_set(const NumericalMonoid& monoid, std::int64_t n) {
  return length_profile(*factorizations(monoid, n)).delta;
}

}  // namespace numfactor

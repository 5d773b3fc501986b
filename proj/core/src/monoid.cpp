#include "numfactor/monoid.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

namespace numfactor {
namespace {

// Apéry set of the smallest generator, computed before any membership table
// exists. The minimum element of S in residue class r mod n₁ never uses n₁
// itself, so it is the shortest-path distance from residue 0 in the graph on
// Z/n₁ whose edges add one of the other generators. Plain Dijkstra.
std::vector<std::int64_t> apery_of_least_generator(
    const std::vector<std::int64_t>& gens) {
  const std::int64_t m = gens.front();
  const auto inf = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> dist(static_cast<std::size_t>(m), inf);
  dist[0] = 0;

  using Node = std::pair<std::int64_t, std::int64_t>;  // (distance, residue)
  std::priority_queue<Node, std::vector<Node>, std::greater<Node>> queue;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    auto [d, r] = queue.top();
    queue.pop();
    if (d != dist[static_cast<std::size_t>(r)]) continue;
    for (std::size_t i = 1; i < gens.size(); ++i) {
      const std::int64_t nd = d + gens[i];
      const std::int64_t nr = (r + gens[i]) % m;
      if (nd < dist[static_cast<std::size_t>(nr)]) {
        dist[static_cast<std::size_t>(nr)] = nd;
        queue.emplace(nd, nr);
      }
    }
  }
  return dist;
}

}  // namespace

NumericalMonoid::NumericalMonoid(const std::vector<std::int64_t>& raw_generators,
                                 std::size_t cache_capacity) {
  if (raw_generators.empty())
    throw_error(Errc::EmptyGenerators, "generator list is empty");
  for (std::int64_t g : raw_generators) {
    if (g < 1)
      throw_error(Errc::InvalidGenerator,
                  "generator " + std::to_string(g) + " is not positive");
    if (g > kMaxGenerator)
      throw_error(Errc::GeneratorTooLarge,
                  "generator " + std::to_string(g) + " exceeds " +
                      std::to_string(kMaxGenerator));
  }

  std::vector<std::int64_t> sorted = raw_generators;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::int64_t g = 0;
  for (std::int64_t v : sorted) g = std::gcd(g, v);
  if (g != 1)
    throw_error(Errc::GcdNotOne, "gcd of generators is " + std::to_string(g) +
                                     "; the complement would be infinite in "
                                     "every residue class");

  auto state = std::make_shared<State>(cache_capacity);

  // Keep a generator only if the ones already kept cannot represent it.
  // Coin-style DP over [0, max input generator], extended per kept generator.
  {
    const auto limit = static_cast<std::size_t>(sorted.back());
    std::vector<bool> reach(limit + 1, false);
    reach[0] = true;
    for (std::int64_t v : sorted) {
      const auto uv = static_cast<std::size_t>(v);
      if (reach[uv]) {
        state->discarded.push_back(v);
        continue;
      }
      state->generators.push_back(v);
      for (std::size_t n = uv; n <= limit; ++n)
        if (reach[n - uv]) reach[n] = true;
    }
  }

  const std::vector<std::int64_t> ap = apery_of_least_generator(state->generators);
  state->frobenius = *std::max_element(ap.begin(), ap.end()) - state->generators.front();

  // Membership table over [0, frobenius + max generator]; everything past the
  // Frobenius number is a member, the table just keeps lookups branch-free for
  // the range downstream loops actually probe.
  const auto table_size =
      static_cast<std::size_t>(state->frobenius + state->generators.back() + 1);
  state->membership.assign(table_size, false);
  state->membership[0] = true;
  for (std::size_t n = 1; n < table_size; ++n) {
    for (std::int64_t gen : state->generators) {
      const auto ug = static_cast<std::size_t>(gen);
      if (n >= ug && state->membership[n - ug]) {
        state->membership[n] = true;
        break;
      }
    }
  }

  state_ = std::move(state);
}

AperySet NumericalMonoid::apery_set(std::int64_t m) const {
  if (m == 0 || !contains(m))
    throw_error(Errc::NotAnElement,
                "Apery modulus " + std::to_string(m) +
                    " is not a nonzero element of the monoid");
  // Scanning to frobenius + m is enough: past the Frobenius number every
  // residue class has been hit.
  if (m > (std::int64_t{1} << 24))
    throw_error(Errc::Overflow,
                "Apery modulus " + std::to_string(m) + " is too large to tabulate");

  AperySet result;
  result.modulus = m;
  result.elements.assign(static_cast<std::size_t>(m), -1);
  std::int64_t found = 0;
  for (std::int64_t n = 0; found < m; ++n) {
    if (!contains(n)) continue;
    auto& slot = result.elements[static_cast<std::size_t>(n % m)];
    if (slot < 0) {
      slot = n;
      ++found;
    }
  }
  return result;
}

std::int64_t NumericalMonoid::lcm_generators() const {
  std::int64_t l = 1;
  for (std::int64_t g : state_->generators) {
    const std::int64_t d = std::gcd(l, g);
    const auto wide = static_cast<__int128>(l / d) * g;
    if (wide > std::numeric_limits<std::int64_t>::max())
      throw_error(Errc::Overflow, "lcm of generators exceeds 64 bits");
    l = static_cast<std::int64_t>(wide);
  }
  return l;
}

std::size_t NumericalMonoid::atom_index(std::int64_t atom_value) const {
  const auto& gens = state_->generators;
  const auto it = std::find(gens.begin(), gens.end(), atom_value);
  if (it == gens.end())
    throw_error(Errc::BadAtomIndex,
                std::to_string(atom_value) + " is not a minimal generator");
  return static_cast<std::size_t>(it - gens.begin());
}

}  // namespace numfactor

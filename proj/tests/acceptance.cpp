// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. Heavier scans use all available cores.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "numfactor/numfactor.hpp"
#include "support/oracles.hpp"

using namespace numfactor;

namespace {

using VectorSet = std::set<std::vector<std::int64_t>>;

struct Check {
  int failures = 0;
  std::string detail;
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures;
    if (detail.size() < 2000) detail += "\n      failed: " + what;
  }
};

const NumericalMonoid& mcnugget() {
  static const NumericalMonoid m({6, 9, 20});
  return m;
}

VectorSet computed_zset(const NumericalMonoid& m, std::int64_t n) {
  VectorSet out;
  for (const auto& z : factorizations(m, n)->factorizations())
    out.insert(z.multiplicities());
  return out;
}

Factorization fz(std::vector<std::int64_t> v) { return Factorization(std::move(v)); }

std::int64_t iv(const ScanValue& v) { return std::get<std::int64_t>(v); }

NumericalMonoid random_monoid(std::mt19937& rng) {
  std::uniform_int_distribution<std::int64_t> gen_dist(2, 40);
  for (;;) {
    std::vector<std::int64_t> gens{gen_dist(rng), gen_dist(rng), gen_dist(rng)};
    std::sort(gens.begin(), gens.end());
    if (gens[0] == gens[1] || gens[1] == gens[2]) continue;
    if (std::gcd(std::gcd(gens[0], gens[1]), gens[2]) != 1) continue;
    NumericalMonoid m(gens, 64);
    if (m.atom_count() != 3) continue;
    return m;
  }
}

std::int64_t random_element(const NumericalMonoid& m, std::mt19937& rng,
                            std::int64_t max_mult) {
  std::uniform_int_distribution<std::int64_t> mult(0, max_mult);
  std::int64_t n = 0;
  for (std::int64_t g : m.generators()) n += mult(rng) * g;
  return n;
}

// ---- criterion bodies ------------------------------------------------------

void criterion_frobenius(Check& c) {
  c.expect(mcnugget().frobenius() == 43, "frobenius(<6,9,20>) == 43");
}

void criterion_factorization_sets(Check& c) {
  const std::map<std::int64_t, VectorSet> published = {
      {18, {{3, 0, 0}, {0, 2, 0}}},
      {60, {{10, 0, 0}, {7, 2, 0}, {4, 4, 0}, {1, 6, 0}, {0, 0, 3}}},
      {103, {{9, 1, 2}, {6, 3, 2}, {3, 5, 2}, {0, 7, 2}}},
      {120,
       {{20, 0, 0}, {17, 2, 0}, {14, 4, 0}, {11, 6, 0}, {8, 8, 0}, {5, 10, 0},
        {2, 12, 0}, {10, 0, 3}, {7, 2, 3}, {4, 4, 3}, {1, 6, 3}, {0, 0, 6}}},
      {126,
       {{21, 0, 0}, {18, 2, 0}, {15, 4, 0}, {12, 6, 0}, {9, 8, 0}, {6, 10, 0},
        {3, 12, 0}, {0, 14, 0}, {11, 0, 3}, {8, 2, 3}, {5, 4, 3}, {2, 6, 3},
        {1, 0, 6}}},
      // the two candidate tables, all 24 rows
      {29, {{0, 1, 1}}},
      {38, {{3, 0, 1}, {0, 2, 1}}},
      {40, {{0, 0, 2}}},
      {49, {{0, 1, 2}}},
      {58, {{3, 0, 2}, {0, 2, 2}}},
      {69, {{10, 1, 0}, {7, 3, 0}, {4, 5, 0}, {1, 7, 0}, {0, 1, 3}}},
      {24, {{4, 0, 0}, {1, 2, 0}}},
      {27, {{3, 1, 0}, {0, 3, 0}}},
      {30, {{5, 0, 0}, {2, 2, 0}}},
      {33, {{4, 1, 0}, {1, 3, 0}}},
      {36, {{6, 0, 0}, {3, 2, 0}, {0, 4, 0}}},
      {39, {{5, 1, 0}, {2, 3, 0}}},
      {42, {{7, 0, 0}, {4, 2, 0}, {1, 4, 0}}},
      {45, {{6, 1, 0}, {3, 3, 0}, {0, 5, 0}}},
      {48, {{8, 0, 0}, {5, 2, 0}, {2, 4, 0}}},
      {51, {{7, 1, 0}, {4, 3, 0}, {1, 5, 0}}},
      {54, {{9, 0, 0}, {6, 2, 0}, {3, 4, 0}, {0, 6, 0}}},
      {57, {{8, 1, 0}, {5, 3, 0}, {2, 5, 0}}},
      {63, {{9, 1, 0}, {6, 3, 0}, {3, 5, 0}, {0, 7, 0}}},
      {66, {{11, 0, 0}, {8, 2, 0}, {5, 4, 0}, {2, 6, 0}, {1, 0, 3}}},
      {72, {{12, 0, 0}, {9, 2, 0}, {6, 4, 0}, {3, 6, 0}, {0, 8, 0}, {2, 0, 3}}},
  };
  for (const auto& [n, expected] : published)
    c.expect(computed_zset(mcnugget(), n) == expected,
             "Z(" + std::to_string(n) + ") matches the published set");
}

void criterion_distances(Check& c) {
  c.expect(distance(fz({0, 14, 0}), fz({11, 0, 3})) == 14, "d = 14");
  c.expect(distance(fz({11, 0, 3}), fz({3, 12, 0})) == 12, "d = 12");
  c.expect(distance(fz({0, 14, 0}), fz({3, 12, 0})) == 3, "d = 3");

  const std::vector<Factorization> order{fz({9, 1, 2}), fz({6, 3, 2}),
                                         fz({3, 5, 2}), fz({0, 7, 2})};
  const std::int64_t expected[4][4] = {
      {0, 3, 6, 9}, {3, 0, 3, 6}, {6, 3, 0, 3}, {9, 6, 3, 0}};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      c.expect(distance(order[i], order[j]) == expected[i][j],
               "distance matrix of 103 at (" + std::to_string(i) + "," +
                   std::to_string(j) + ")");
}

void criterion_catenary(Check& c) {
  c.expect(catenary_degree(mcnugget(), 103) == 3, "c(103) == 3");
  c.expect(catenary_degree(mcnugget(), 18) == 3, "c(18) == 3");
  c.expect(catenary_degree(mcnugget(), 60) == 7, "c(60) == 7");
  c.expect(catenary_degree_monoid(mcnugget()) == 7, "c(M) == 7");
  c.expect(betti_elements(mcnugget()) == std::vector<std::int64_t>{18, 60},
           "Betti(M) == {18,60}");
  c.expect(betti_candidates(mcnugget()) ==
               std::vector<std::int64_t>{18, 29, 38, 40, 49, 58, 60, 69},
           "candidate pool == {18,29,38,40,49,58,60,69}");
  for (std::int64_t a = 2; a <= 12; ++a)
    for (std::int64_t b = a + 1; b <= 12; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const NumericalMonoid s({a, b});
      const std::string name = "<" + std::to_string(a) + "," + std::to_string(b) + ">";
      c.expect(betti_elements(s) == std::vector<std::int64_t>{a * b},
               "Betti(" + name + ") == {ab}");
      c.expect(catenary_degree(s, a * b) == b, "c(ab) == b for " + name);
      c.expect(catenary_degree_monoid(s) == b, "c(" + name + ") == b");
    }
}

void criterion_tame(Check& c) {
  c.expect(tame_wrt(mcnugget(), 126, 0) == 3, "t(126,6) == 3");
  c.expect(tame_wrt(mcnugget(), 126, 1) == 7, "t(126,9) == 7");
  c.expect(tame_wrt(mcnugget(), 126, 2) == 10, "t(126,20) == 10");
  c.expect(tame_degree(mcnugget(), 126) == 10, "t(126) == 10");
  for (std::int64_t n : {60, 66, 69, 72})
    c.expect(tame_degree(mcnugget(), n) == 10,
             "t(" + std::to_string(n) + ") == 10");
  for (std::int64_t n : {33, 39, 51, 57})
    c.expect(tame_degree(mcnugget(), n) == 0,
             "t(" + std::to_string(n) + ") == 0");
  for (std::int64_t n : {18, 24, 27, 30, 36, 38, 42, 45, 48, 54, 58, 63})
    c.expect(tame_degree(mcnugget(), n) == 3,
             "t(" + std::to_string(n) + ") == 3");
  c.expect(tame_degree_monoid(mcnugget()) == 10, "t(M) == 10");
  for (std::int64_t a = 2; a <= 12; ++a)
    for (std::int64_t b = a + 1; b <= 12; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const NumericalMonoid s({a, b});
      c.expect(tame_degree_monoid(s) == b,
               "t(<" + std::to_string(a) + "," + std::to_string(b) + ">) == b");
    }
}

void criterion_apery(Check& c) {
  c.expect(mcnugget().apery_set(6).elements ==
               std::vector<std::int64_t>{0, 49, 20, 9, 40, 29},
           "Ap(M,6)");
  c.expect(mcnugget().apery_set(9).elements ==
               std::vector<std::int64_t>{0, 46, 20, 12, 40, 32, 6, 52, 26},
           "Ap(M,9), the set published under a modulus-10 label");
  c.expect(mcnugget().apery_set(20).elements ==
               std::vector<std::int64_t>{0,  21, 42, 63, 24, 45, 6,  27, 48, 9,
                                         30, 51, 12, 33, 54, 15, 36, 57, 18, 39},
           "Ap(M,20)");
}

void criterion_delta(Check& c) {
  const auto expected_for_residue = [](std::int64_t r) -> std::vector<std::int64_t> {
    switch (r) {
      case 3: case 8: case 14: case 17:
        return {1};
      case 2: case 5: case 10: case 11: case 16: case 19:
        return {1, 2};
      case 1: case 4: case 7: case 12: case 13: case 18:
        return {1, 3};
      default:
        return {1, 4};
    }
  };
  std::set<std::int64_t> accumulated;
  bool table_ok = true;
  for (std::int64_t n = 92; n <= 492; ++n) {
    const auto delta = delta_set(mcnugget(), n);
    if (delta != expected_for_residue(n % 20)) table_ok = false;
    accumulated.insert(delta.begin(), delta.end());
  }
  c.expect(table_ok, "Delta(n) equals the residue-mod-20 table on [92, 492]");
  c.expect(accumulated == std::set<std::int64_t>{1, 2, 3, 4},
           "accumulated Delta(M) == {1,2,3,4}");
  c.expect(monoid_elasticity(mcnugget()) == Rational(10, 3),
           "rho(M) == 10/3 exactly");
}

void criterion_periodicity(Check& c) {
  const NumericalMonoid m({6, 9, 20}, 1024);
  const PeriodicityResult cat =
      detect_period(scan(m, Invariant::Catenary, 104 + 2 * 180), 180, 2);
  c.expect(cat.onset == 104, "catenary onset == 104");
  c.expect(cat.period == 1, "catenary period == 1");
  c.expect(iv(cat.value_at_onset()) == 7, "catenary stable value == 7");

  const PeriodicityResult tame =
      detect_period(scan(m, Invariant::Tame, 152 + 2 * 180), 180, 2);
  c.expect(tame.onset == 152, "tame onset == 152");
  c.expect(tame.period == 60, "tame period == 60");

  const NumericalMonoid s({5, 11, 12}, 512);
  const PeriodicityResult cat5 =
      detect_period(scan(s, Invariant::Catenary, 55 + 2 * 660), 660, 2);
  c.expect(cat5.period == 5, "catenary period of <5,11,12> == 5");
  c.expect(cat5.onset <= 55, "catenary onset of <5,11,12> <= 55");
}

void criterion_properties(Check& c) {
  // metric axioms, 10000 randomized cases
  {
    std::mt19937 rng(424242);
    bool ok = true;
    for (int trial = 0; trial < 10000 && ok; ++trial) {
      const NumericalMonoid m = random_monoid(rng);
      const std::int64_t n = random_element(m, rng, 8);
      const auto zset = factorizations(m, n);
      std::uniform_int_distribution<std::size_t> pick(0, zset->size() - 1);
      const Factorization& z1 = (*zset)[pick(rng)];
      const Factorization& z2 = (*zset)[pick(rng)];
      const Factorization& z3 = (*zset)[pick(rng)];
      ok = ok && ((distance(z1, z2) == 0) == (z1 == z2));
      ok = ok && distance(z1, z2) == distance(z2, z1);
      ok = ok && distance(z1, z2) <= distance(z1, z3) + distance(z2, z3);
      if (!(z1 == z2)) {
        ok = ok && distance(z1, z2) >= 2;
        ok = ok && distance(z1, z2) <= length_profile(*zset).max_length;
      }
    }
    c.expect(ok, "metric axioms over 10000 random cases");
  }

  // union-find bottleneck vs threshold oracle, 10000 randomized cases
  {
    std::mt19937 rng(31415926);
    bool ok = true;
    for (int trial = 0; trial < 10000 && ok; ++trial) {
      const NumericalMonoid m = random_monoid(rng);
      const std::int64_t n = random_element(m, rng, 4);
      ok = catenary_degree(m, n) == test::oracle_catenary_threshold(m, n);
    }
    c.expect(ok, "catenary equals the threshold oracle over 10000 random cases");
  }

  // minimal presentation connects every factorization graph up to 300
  {
    const Presentation p = minimal_presentation(mcnugget());
    bool connected = true;
    for (std::int64_t n = 0; n <= 300; ++n) {
      if (!mcnugget().contains(n)) continue;
      if (!factorization_graph(mcnugget(), n, p).connected()) connected = false;
    }
    c.expect(connected, "presentation-driven graphs connected for n <= 300");
    for (std::size_t drop = 0; drop < p.relations.size(); ++drop) {
      Presentation reduced;
      for (std::size_t i = 0; i < p.relations.size(); ++i)
        if (i != drop) reduced.relations.push_back(p.relations[i]);
      c.expect(!factorization_graph(mcnugget(), p.relations[drop].element, reduced)
                    .connected(),
               "dropping a relation disconnects its Betti element");
    }
  }

  // remaining module invariants
  {
    // membership agrees with brute enumeration over the full table range
    for (const auto& gens : {std::vector<std::int64_t>{6, 9, 20},
                             std::vector<std::int64_t>{2, 3},
                             std::vector<std::int64_t>{5, 11, 12}}) {
      const NumericalMonoid m(gens);
      bool ok = true;
      for (std::int64_t n = 0; n <= m.frobenius() + m.max_generator(); ++n)
        ok = ok && m.contains(n) == test::brute_contains(gens, n);
      for (std::int64_t n = m.frobenius() + 1; n <= m.frobenius() + 300; ++n)
        ok = ok && m.contains(n);
      c.expect(ok, "membership oracle equivalence");
    }
    // Apery structure on assorted moduli
    for (std::int64_t mod : {6, 9, 12, 18, 20, 26}) {
      const AperySet ap = mcnugget().apery_set(mod);
      bool ok = static_cast<std::int64_t>(ap.elements.size()) == mod;
      for (std::int64_t w : ap.elements)
        ok = ok && mcnugget().contains(w) && !mcnugget().contains(w - mod);
      c.expect(ok, "Apery invariants at modulus " + std::to_string(mod));
    }
    for (std::int64_t a = 2; a <= 12; ++a)
      for (std::int64_t b = a + 1; b <= 13; ++b) {
        if (std::gcd(a, b) != 1) continue;
        std::vector<std::int64_t> expected(static_cast<std::size_t>(a));
        for (std::int64_t j = 0; j < a; ++j)
          expected[static_cast<std::size_t>((j * b) % a)] = j * b;
        c.expect(NumericalMonoid({a, b}).apery_set(a).elements == expected,
                 "two-generator Apery formula");
      }
    // enumeration completeness against the triple loop
    bool complete = true;
    for (std::int64_t n = 0; n <= 200; ++n) {
      if (!mcnugget().contains(n)) continue;
      if (computed_zset(mcnugget(), n) != test::brute_factorizations({6, 9, 20}, n))
        complete = false;
    }
    c.expect(complete, "enumeration completeness for n <= 200");
    // catenary oracle equality and the zero criterion
    bool cat_ok = true, zero_ok = true;
    for (std::int64_t n = 0; n <= 200; ++n) {
      if (!mcnugget().contains(n)) continue;
      const std::int64_t deg = catenary_degree(mcnugget(), n);
      if (deg != test::oracle_catenary_threshold(mcnugget(), n)) cat_ok = false;
      const bool unique = factorizations(mcnugget(), n)->size() == 1;
      if ((deg == 0) != unique || (!unique && deg < 2)) zero_ok = false;
    }
    c.expect(cat_ok, "catenary threshold oracle for n <= 200");
    c.expect(zero_ok, "c(n) == 0 iff unique factorization");
    // tame bounds, support criterion, 0-or->=2
    bool tame_ok = true;
    for (std::int64_t n = 0; n <= 300; ++n) {
      if (!mcnugget().contains(n)) continue;
      const std::int64_t t = tame_degree(mcnugget(), n);
      const auto zset = factorizations(mcnugget(), n);
      if (t > length_profile(*zset).max_length) tame_ok = false;
      bool same_support = true;
      for (std::size_t i = 1; i < zset->size(); ++i)
        if ((*zset)[i].support() != (*zset)[0].support()) same_support = false;
      if ((t == 0) != same_support) tame_ok = false;
      if (t != 0 && t < 2) tame_ok = false;
    }
    c.expect(tame_ok, "tame bounds and support criterion for n <= 300");
    // Betti seeding invariance and strict filtering
    c.expect(betti_elements(mcnugget(), 0) == betti_elements(mcnugget(), 1),
             "Betti elements independent of Apery seeding");
    for (std::int64_t n : {29, 38, 40, 49, 58, 69})
      c.expect(betti_graph(mcnugget(), n).connected(),
               "candidate " + std::to_string(n) + " filtered out");
    // Betti elements of <5,11,12> against a full window scan
    {
      const NumericalMonoid s({5, 11, 12});
      std::vector<std::int64_t> via_scan;
      for (std::int64_t n = 1; n <= s.frobenius() + 660; ++n)
        if (s.contains(n) && !betti_graph(s, n).connected()) via_scan.push_back(n);
      c.expect(betti_elements(s) == via_scan, "Betti(<5,11,12>) full-scan equality");
      std::int64_t scan_max = 0;
      for (std::int64_t n = 0; n <= s.frobenius() + 660; ++n)
        if (s.contains(n))
          scan_max = std::max(scan_max, catenary_degree(s, n));
      c.expect(catenary_degree_monoid(s) == scan_max,
               "c(<5,11,12>) equals the scan maximum");
    }
  }

  // periodicity invariants: divisibility, guard stability, window maxima
  {
    const NumericalMonoid m({6, 9, 20}, 1024);
    const auto cat2 = detect_period(scan(m, Invariant::Catenary, 104 + 2 * 180), 180, 2);
    const auto cat4 = detect_period(scan(m, Invariant::Catenary, 104 + 4 * 180), 180, 4);
    const auto tame2 = detect_period(scan(m, Invariant::Tame, 152 + 2 * 180), 180, 2);
    const auto tame4 = detect_period(scan(m, Invariant::Tame, 152 + 4 * 180), 180, 4);
    c.expect(180 % cat2.period == 0 && 180 % tame2.period == 0,
             "detected periods divide the lcm");
    c.expect(cat2.onset == cat4.onset && cat2.period == cat4.period,
             "McNugget catenary detection is guard-stable");
    c.expect(tame2.onset == tame4.onset && tame2.period == tame4.period,
             "McNugget tame detection is guard-stable");

    const auto window_max = [](const PeriodicityResult& r) {
      std::int64_t best = 0;
      for (std::size_t i = 0; i < r.sequence.elements.size(); ++i)
        if (r.sequence.elements[i] >= r.onset &&
            r.sequence.elements[i] <= r.onset + r.period)
          best = std::max(best, iv(r.sequence.values[i]));
      return best;
    };
    c.expect(window_max(cat2) == catenary_degree_monoid(m),
             "catenary window max equals c(M)");
    c.expect(window_max(tame2) == tame_degree_monoid(m),
             "tame window max equals t(M)");

    const NumericalMonoid s23({2, 3});
    for (Invariant inv : {Invariant::Catenary, Invariant::Tame}) {
      const auto g2 = detect_period(scan(s23, inv, 100), 6, 2);
      const auto g4 = detect_period(scan(s23, inv, 100), 6, 4);
      c.expect(g2.onset == g4.onset && g2.period == g4.period,
               "<2,3> detection is guard-stable");
      c.expect(6 % g2.period == 0, "<2,3> period divides 6");
      const std::int64_t expected_max = inv == Invariant::Catenary
                                            ? catenary_degree_monoid(s23)
                                            : tame_degree_monoid(s23);
      c.expect(window_max(g2) == expected_max, "<2,3> window max equals the monoid value");
    }

    const NumericalMonoid s({5, 11, 12}, 512);
    const InvariantSeries cat5 = scan(s, Invariant::Catenary, 55 + 2 * 660);
    const auto c5g2 = detect_period(cat5, 660, 2);
    c.expect(660 % c5g2.period == 0, "<5,11,12> period divides 660");
    c.expect(window_max(c5g2) == catenary_degree_monoid(s),
             "<5,11,12> catenary window max equals c(S)");

    const InvariantSeries tame5 = scan(s, Invariant::Tame, 2700);
    const auto t5g2 = detect_period(tame5, 660, 2);
    const auto t5g4 = detect_period(tame5, 660, 4);
    c.expect(t5g2.onset == t5g4.onset && t5g2.period == t5g4.period,
             "<5,11,12> tame detection is guard-stable");
    c.expect(660 % t5g2.period == 0, "<5,11,12> tame period divides 660");
    c.expect(window_max(t5g2) == tame_degree_monoid(s),
             "<5,11,12> tame window max equals t(S)");
  }
}

}  // namespace

int main() {
  struct Criterion {
    std::string name;
    std::function<void(Check&)> body;
  };
  const std::vector<Criterion> criteria = {
      {"Frobenius number of <6,9,20> is 43", criterion_frobenius},
      {"published factorization sets reproduced exactly", criterion_factorization_sets},
      {"distance values and the 4x4 matrix of 103", criterion_distances},
      {"catenary degrees, Betti elements, two-generator closed form", criterion_catenary},
      {"tame degrees and the two-generator closed form", criterion_tame},
      {"Apery sets of 6, 9 and 20", criterion_apery},
      {"delta sets: residue table, union, exact elasticity", criterion_delta},
      {"eventual periodicity: onsets, periods, stable values", criterion_periodicity},
      {"property suites and module invariants", criterion_properties},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    std::string aborted;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].body(check);
    } catch (const std::exception& e) {
      ++check.failures;
      aborted = std::string(" (exception: ") + e.what() + ")";
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    const bool ok = check.failures == 0;
    std::cout << (ok ? "PASS" : "FAIL") << "  " << i + 1 << ". "
              << criteria[i].name << "  [" << elapsed << " ms]" << aborted
              << (ok ? "" : check.detail) << "\n";
    if (!ok) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" :
                std::to_string(failed) + " criteria failed")
            << "\n";
  return failed;
}

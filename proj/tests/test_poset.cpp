#include <doctest.h>

#include <algorithm>

#include "skel/poset.hpp"
#include "skel/random_ideal.hpp"

using namespace skel;

namespace {

ExponentVector ev(std::vector<int> e) { return ExponentVector(std::move(e)); }

ExponentVector ones(int n, int value = 1) {
  return ev(std::vector<int>(static_cast<std::size_t>(n), value));
}

// between-point enumeration, the oracle for the O(1) interval test
bool interval_valid_exhaustive(const CharacteristicPoset& poset, const ExponentVector& low,
                               const ExponentVector& high) {
  if (!divides(low, high)) return false;
  for (const auto& e : box_points(high)) {
    if (divides(low, e) && !poset.is_point(e)) return false;
  }
  return true;
}

// restricted random partition: tops only stretch coordinates all the way to g
Partition random_restricted_partition(const CharacteristicPoset& poset, SplitMix64& rng) {
  Partition out;
  std::vector<bool> covered(poset.size(), false);
  const ExponentVector& g = poset.g();
  while (true) {
    std::size_t c = 0;
    while (c < poset.size() && covered[c]) ++c;
    if (c == poset.size()) break;
    const ExponentVector& low = poset.points()[c];
    std::vector<ExponentVector> tops;
    for (std::size_t d = c; d < poset.size(); ++d) {
      const ExponentVector& high = poset.points()[d];
      if (!divides(low, high)) continue;
      bool restricted = true, free = true;
      for (int k = 0; k < g.arity(); ++k) {
        if (high[k] != low[k] && high[k] != g[k]) restricted = false;
      }
      if (!restricted) continue;
      for (std::size_t e = c; e <= d; ++e) {
        if (divides(low, poset.points()[e]) && divides(poset.points()[e], high) && covered[e]) {
          free = false;
        }
      }
      if (free) tops.push_back(high);
    }
    const ExponentVector& high = tops[rng.below(static_cast<std::uint32_t>(tops.size()))];
    out.intervals.push_back({low, high});
    for (std::size_t e = 0; e < poset.size(); ++e) {
      if (divides(low, poset.points()[e]) && divides(poset.points()[e], high)) covered[e] = true;
    }
  }
  return out;
}

// unrestricted: any poset point above the root may serve as a top
Partition random_partition(const CharacteristicPoset& poset, SplitMix64& rng) {
  Partition out;
  std::vector<bool> covered(poset.size(), false);
  while (true) {
    std::size_t c = 0;
    while (c < poset.size() && covered[c]) ++c;
    if (c == poset.size()) break;
    const ExponentVector& low = poset.points()[c];
    std::vector<ExponentVector> tops;
    for (std::size_t d = c; d < poset.size(); ++d) {
      const ExponentVector& high = poset.points()[d];
      if (!divides(low, high)) continue;
      bool free = true;
      for (std::size_t e = c; e <= d; ++e) {
        if (divides(low, poset.points()[e]) && divides(poset.points()[e], high) && covered[e]) {
          free = false;
        }
      }
      if (free) tops.push_back(high);
    }
    const ExponentVector& high = tops[rng.below(static_cast<std::uint32_t>(tops.size()))];
    out.intervals.push_back({low, high});
    for (std::size_t e = 0; e < poset.size(); ++e) {
      if (divides(low, poset.points()[e]) && divides(poset.points()[e], high)) covered[e] = true;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("rho and the Z/Y split") {
  CHECK(rho(ev({1, 0, 1}), ev({1, 1, 1})) == 2);
  CHECK(rho(ev({2, 3}), ev({2, 3})) == 2);
  CHECK(rho(ev({0, 0, 0}), ev({1, 2, 1})) == 0);
  CHECK(z_set(ev({1, 0, 1}), ev({1, 1, 1})) == std::vector<int>{0, 2});
  CHECK(y_set(ev({1, 0, 1}), ev({1, 1, 1})) == std::vector<int>{1});
  CHECK_THROWS_AS(rho(ev({1}), ev({1, 1})), ArityError);
}

TEST_CASE("build_poset spec examples") {
  MonomialIdeal ring2 = MonomialIdeal::unit(2);
  CharacteristicPoset p1 = build_poset(minimalize(2, {ev({1, 1})}), ring2, ev({1, 1}));
  CHECK(p1.points() == std::vector<ExponentVector>{ev({0, 0}), ev({0, 1}), ev({1, 0})});

  CharacteristicPoset p2 =
      build_poset(MonomialIdeal(3), minimalize(3, {ev({1, 1, 0}), ev({0, 1, 1})}), ev({1, 1, 1}));
  CHECK(p2.points() == std::vector<ExponentVector>{ev({0, 1, 1}), ev({1, 1, 0}), ev({1, 1, 1})});

  CharacteristicPoset p3 = build_poset(minimalize(3, {ev({2, 0, 0}), ev({1, 1, 0})}),
                                       MonomialIdeal::unit(3), ev({2, 1, 1}));
  CHECK(p3.size() == 6);

  CHECK_THROWS_AS(build_poset(minimalize(2, {ev({2, 1})}), ring2, ev({1, 1})),
                  PreconditionError);
  CHECK_THROWS_AS(
      build_poset(minimalize(2, {ev({1, 0})}), minimalize(2, {ev({0, 1})}), ev({1, 1})),
      PreconditionError);
}

TEST_CASE("dimension_from_poset spec examples") {
  MonomialIdeal ring2 = MonomialIdeal::unit(2);
  CHECK(dimension_from_poset(build_poset(minimalize(2, {ev({1, 1})}), ring2, ev({1, 1}))) == 1);
  CHECK(dimension_from_poset(build_poset(minimalize(3, {ev({1, 1, 0}), ev({0, 1, 1})}),
                                         MonomialIdeal::unit(3), ev({1, 1, 1}))) == 2);
  CHECK(dimension_from_poset(build_poset(MonomialIdeal(3), MonomialIdeal::unit(3),
                                         ev({2, 1, 3}))) == 3);
  // empty poset: J = I inside the box
  MonomialIdeal i = minimalize(2, {ev({1, 0})});
  CharacteristicPoset empty = build_poset(i, i, ev({1, 1}));
  CHECK(empty.empty());
  CHECK(dimension_from_poset(empty) == -1);
}

TEST_CASE("Eq. (1): poset dimension agrees with the oracle on 300 random ideals") {
  SplitMix64 rng(1001);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + static_cast<int>(rng.below(4));  // n <= 5
    MonomialIdeal ideal = random_ideal(rng.next(), n, 6, 3);
    CharacteristicPoset poset =
        build_poset(ideal, MonomialIdeal::unit(n), generator_join(ideal));
    CHECK(dimension_from_poset(poset) == dimension_oracle(ideal));
  }
}

TEST_CASE("Lemma 1.1: rho stays below the dimension on the enlarged box") {
  SplitMix64 rng(1002);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng.below(3));  // n <= 4
    MonomialIdeal inner = random_ideal(rng.next(), n, 4, 2);
    // J/I for J = I plus extra generators, and J = S for half the trials
    MonomialIdeal outer = trial % 2 == 0
                              ? MonomialIdeal::unit(n)
                              : add_generators(inner, random_ideal(rng.next(), n, 2, 2).generators());
    ExponentVector g = join(generator_join(inner), generator_join(outer));
    CharacteristicPoset poset = build_poset(inner, outer, g);
    int d = dimension_from_poset(poset);
    for (const auto& b : box_points(sum(g, ones(n)))) {
      if (outer.contains(b) && !inner.contains(b)) CHECK(rho(b, g) <= d);
    }
  }
}

TEST_CASE("is_valid_interval spec examples") {
  CharacteristicPoset p = build_poset(minimalize(3, {ev({1, 1, 0}), ev({0, 1, 1})}),
                                      MonomialIdeal::unit(3), ev({1, 1, 1}));
  CHECK(is_valid_interval(p, ev({0, 0, 0}), ev({1, 0, 1})));
  CHECK_FALSE(is_valid_interval(p, ev({0, 0, 0}), ev({1, 1, 1})));
  CHECK(is_valid_interval(p, ev({0, 1, 0}), ev({0, 1, 0})));
}

TEST_CASE("interval shortcut agrees with exhaustive enumeration") {
  SplitMix64 rng(1003);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + static_cast<int>(rng.below(3));
    MonomialIdeal inner = random_ideal(rng.next(), n, 4, 2);
    MonomialIdeal outer =
        trial % 2 == 0 ? MonomialIdeal::unit(n)
                       : add_generators(inner, random_ideal(rng.next(), n, 2, 2).generators());
    ExponentVector g = join(generator_join(inner), generator_join(outer));
    CharacteristicPoset poset = build_poset(inner, outer, g);
    if (poset.size() > 200) continue;
    for (const auto& low : poset.points()) {
      for (const auto& high : poset.points()) {
        CHECK(is_valid_interval(poset, low, high) ==
              interval_valid_exhaustive(poset, low, high));
      }
    }
  }
}

TEST_CASE("validate_partition spec examples") {
  CharacteristicPoset p = build_poset(minimalize(3, {ev({1, 1, 0}), ev({0, 1, 1})}),
                                      MonomialIdeal::unit(3), ev({1, 1, 1}));
  Partition good{{{ev({0, 0, 0}), ev({0, 0, 1})},
                  {ev({1, 0, 0}), ev({1, 0, 1})},
                  {ev({0, 1, 0}), ev({0, 1, 0})}}};
  CHECK(validate_partition(p, good).valid);

  Partition missing{{{ev({0, 0, 0}), ev({0, 0, 1})}, {ev({1, 0, 0}), ev({1, 0, 1})}}};
  PartitionCheck m = validate_partition(p, missing);
  CHECK_FALSE(m.valid);
  REQUIRE(m.missed.has_value());
  CHECK(*m.missed == ev({0, 1, 0}));

  Partition overlapping{{{ev({0, 0, 0}), ev({1, 0, 0})},
                         {ev({1, 0, 0}), ev({1, 0, 1})},
                         {ev({0, 1, 0}), ev({0, 1, 0})},
                         {ev({0, 0, 1}), ev({0, 0, 1})}}};
  PartitionCheck o = validate_partition(p, overlapping);
  CHECK_FALSE(o.valid);
  REQUIRE(o.duplicated.has_value());
  CHECK(*o.duplicated == ev({1, 0, 0}));
}

TEST_CASE("partition_to_decomposition spec examples") {
  MonomialIdeal ring2 = MonomialIdeal::unit(2);
  CharacteristicPoset p1 = build_poset(minimalize(2, {ev({1, 1})}), ring2, ev({1, 1}));
  Partition part1{{{ev({0, 0}), ev({1, 0})}, {ev({0, 1}), ev({0, 1})}}};
  StanleyDecomposition d1 = partition_to_decomposition(p1, part1);
  REQUIRE(d1.spaces.size() == 2);
  CHECK(d1.spaces[0].root == ev({0, 0}));
  CHECK(d1.spaces[0].vars == std::vector<int>{0});

  // a singleton [b,b] with b = g gets all the variables
  CharacteristicPoset pfree = build_poset(MonomialIdeal(2), ring2, ev({1, 1}));
  Partition part2{{{ev({0, 0}), ev({0, 1})}, {ev({1, 0}), ev({1, 0})}, {ev({1, 1}), ev({1, 1})}}};
  StanleyDecomposition d2 = partition_to_decomposition(pfree, part2);
  CHECK(d2.spaces.back().root == ev({1, 1}));
  CHECK(d2.spaces.back().vars == std::vector<int>{0, 1});

  // generator-rooted partition of the module (x1x2, x2x3)
  MonomialIdeal module = minimalize(3, {ev({1, 1, 0}), ev({0, 1, 1})});
  CharacteristicPoset pm = build_poset(MonomialIdeal(3), module, ev({1, 1, 1}));
  Partition part3{{{ev({1, 1, 0}), ev({1, 1, 1})}, {ev({0, 1, 1}), ev({0, 1, 1})}}};
  StanleyDecomposition d3 = partition_to_decomposition(pm, part3);
  REQUIRE(d3.spaces.size() == 2);
  CHECK(d3.spaces[0].root == ev({1, 1, 0}));
  CHECK(d3.spaces[0].vars == std::vector<int>{0, 1, 2});
  CHECK(d3.spaces[1].root == ev({0, 1, 1}));
  CHECK(d3.spaces[1].vars == std::vector<int>{1, 2});
}

TEST_CASE("general intervals are refined into fibers") {
  // poset {(0,0),(1,0)} under g=(2,1): the single interval [(0,0),(1,0)]
  // has 0 < 1 < 2 in the first coordinate, so one space per fiber
  MonomialIdeal inner = minimalize(2, {ev({2, 0}), ev({0, 1})});
  CharacteristicPoset p = build_poset(inner, MonomialIdeal::unit(2), ev({2, 1}));
  REQUIRE(p.size() == 2);
  Partition part{{{ev({0, 0}), ev({1, 0})}}};
  StanleyDecomposition dec = partition_to_decomposition(p, part);
  REQUIRE(dec.spaces.size() == 2);
  CHECK(dec.spaces[0].root == ev({0, 0}));
  CHECK(dec.spaces[1].root == ev({1, 0}));
  CHECK(dec.spaces[0].vars.empty());
  CHECK(validate_decomposition_in_box(inner, MonomialIdeal::unit(2), dec, ev({3, 2})).valid);
}

TEST_CASE("decomposition_to_partition spec examples") {
  MonomialIdeal ring2 = MonomialIdeal::unit(2);
  MonomialIdeal inner = minimalize(2, {ev({1, 1})});
  CharacteristicPoset p = build_poset(inner, ring2, ev({1, 1}));
  StanleyDecomposition dec{{{ev({0, 0}), {0}}, {ev({0, 1}), {1}}}};
  Partition part = decomposition_to_partition(p, dec);
  REQUIRE(part.intervals.size() == 2);
  CHECK(part.intervals[0].low == ev({0, 0}));
  CHECK(part.intervals[0].high == ev({1, 0}));
  CHECK(part.intervals[1].low == ev({0, 1}));
  CHECK(part.intervals[1].high == ev({0, 1}));

  CharacteristicPoset pfree = build_poset(MonomialIdeal(2), ring2, ev({2, 2}));
  StanleyDecomposition full{{{ev({0, 0}), {0, 1}}}};
  Partition whole = decomposition_to_partition(pfree, full);
  REQUIRE(whole.intervals.size() == 1);
  CHECK(whole.intervals[0].low == ev({0, 0}));
  CHECK(whole.intervals[0].high == ev({2, 2}));

  StanleyDecomposition broken{{{ev({0, 0}), {0}}}};
  CHECK_THROWS_AS(decomposition_to_partition(p, broken), PreconditionError);
}

TEST_CASE("partition <-> decomposition round-trips") {
  SplitMix64 rng(1004);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng.below(2));
    MonomialIdeal inner = random_ideal(rng.next(), n, 3, 2);
    MonomialIdeal outer =
        trial % 2 == 0 ? MonomialIdeal::unit(n)
                       : add_generators(inner, random_ideal(rng.next(), n, 2, 2).generators());
    ExponentVector g = join(generator_join(inner), generator_join(outer));
    CharacteristicPoset poset = build_poset(inner, outer, g);
    if (poset.empty() || poset.size() > 60) continue;
    ++checked;

    // restricted partitions come back unchanged
    Partition restricted = random_restricted_partition(poset, rng);
    REQUIRE(validate_partition(poset, restricted).valid);
    StanleyDecomposition dec = partition_to_decomposition(poset, restricted);
    CHECK(validate_decomposition_in_box(inner, outer, dec, sum(g, ones(n))).valid);
    Partition back = decomposition_to_partition(poset, dec);
    REQUIRE(back.intervals.size() == restricted.intervals.size());
    for (std::size_t i = 0; i < back.intervals.size(); ++i) {
      CHECK(back.intervals[i].low == restricted.intervals[i].low);
      CHECK(back.intervals[i].high == restricted.intervals[i].high);
    }

    // general partitions: the round trip returns the fiber refinement,
    // still a valid partition that tiles the module
    Partition general = random_partition(poset, rng);
    StanleyDecomposition dec2 = partition_to_decomposition(poset, general);
    CHECK(validate_decomposition_in_box(inner, outer, dec2, sum(g, ones(n))).valid);
    Partition refined = decomposition_to_partition(poset, dec2);
    CHECK(validate_partition(poset, refined).valid);
    CHECK(refined.intervals.size() >= general.intervals.size());
  }
  CHECK(checked > 10);
}

#include <doctest.h>

#include <algorithm>

#include "skel/ideal.hpp"
#include "skel/ideal_io.hpp"
#include "skel/random_ideal.hpp"

using namespace skel;

namespace {

ExponentVector ev(std::vector<int> e) { return ExponentVector(std::move(e)); }

// membership straight from the definition, against the raw generator list
bool raw_contains(const std::vector<ExponentVector>& gens, const ExponentVector& b) {
  return std::any_of(gens.begin(), gens.end(),
                     [&](const ExponentVector& a) { return divides(a, b); });
}

}  // namespace

TEST_CASE("exponent vector lattice operations") {
  ExponentVector a = ev({1, 0, 2}), b = ev({0, 3, 2});
  CHECK(meet(a, b) == ev({0, 0, 2}));
  CHECK(join(a, b) == ev({1, 3, 2}));
  CHECK(sum(a, b) == ev({1, 3, 4}));
  CHECK(clipped_diff(a, b) == ev({1, 0, 0}));
  CHECK(a.total_degree() == 3);
  CHECK(divides(meet(a, b), a));
  CHECK(divides(a, join(a, b)));
  CHECK_THROWS_AS(meet(a, ev({1, 0})), ArityError);
  CHECK_THROWS_AS(ExponentVector({1, -1}), Error);

  // absorption on random samples
  SplitMix64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> x(4), y(4);
    for (auto& v : x) v = static_cast<int>(rng.below(5));
    for (auto& v : y) v = static_cast<int>(rng.below(5));
    ExponentVector p = ev(x), q = ev(y);
    CHECK(join(p, meet(p, q)) == p);
    CHECK(meet(p, join(p, q)) == p);
  }
}

TEST_CASE("grlex order and box enumeration") {
  CHECK(grlex_less(ev({0, 1}), ev({1, 0})));
  CHECK(grlex_less(ev({1, 0}), ev({1, 1})));
  CHECK_FALSE(grlex_less(ev({1, 0}), ev({1, 0})));
  auto box = box_points(ev({1, 2}));
  CHECK(box.size() == 6);
  CHECK(std::is_sorted(box.begin(), box.end(), GrlexLess{}));
  CHECK(box.front() == ev({0, 0}));
  CHECK(box.back() == ev({1, 2}));
  auto deg2 = monomials_of_total_degree(3, 2);
  CHECK(deg2.size() == 6);  // C(4,2)
  for (const auto& m : deg2) CHECK(m.total_degree() == 2);
}

TEST_CASE("minimalize spec examples") {
  MonomialIdeal a = minimalize(2, {ev({1, 1}), ev({2, 1})});
  CHECK(a.generators() == std::vector<ExponentVector>{ev({1, 1})});

  MonomialIdeal b = minimalize(3, {ev({1, 1, 0}), ev({0, 1, 1})});
  CHECK(b.generators().size() == 2);

  MonomialIdeal c = minimalize(2, {});
  CHECK(c.is_zero());
  CHECK_FALSE(c.contains(ev({3, 3})));
  CHECK_FALSE(c.contains(ev({0, 0})));

  CHECK_THROWS_AS(minimalize(2, {ev({1, 1, 1})}), ArityError);
}

TEST_CASE("minimalize is idempotent and membership-preserving") {
  SplitMix64 rng(42);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 2 + static_cast<int>(rng.below(4));  // n <= 5
    int count = 1 + static_cast<int>(rng.below(6));
    std::vector<ExponentVector> gens;
    for (int i = 0; i < count; ++i) {
      std::vector<int> e(static_cast<std::size_t>(n));
      for (auto& v : e) v = static_cast<int>(rng.below(5));  // exponents <= 4
      gens.push_back(ev(e));
    }
    MonomialIdeal ideal = minimalize(n, gens);
    CHECK(minimalize(n, ideal.generators()) == ideal);
    // antichain
    for (const auto& u : ideal.generators()) {
      for (const auto& v : ideal.generators()) {
        if (!(u == v)) CHECK_FALSE(divides(u, v));
      }
    }
    // same ideal: spot-check membership over random points
    for (int probe = 0; probe < 30; ++probe) {
      std::vector<int> e(static_cast<std::size_t>(n));
      for (auto& v : e) v = static_cast<int>(rng.below(6));
      ExponentVector b = ev(e);
      CHECK(ideal.contains(b) == raw_contains(gens, b));
    }
  }
}

TEST_CASE("contains spec examples") {
  MonomialIdeal i1 = minimalize(2, {ev({1, 1})});
  CHECK(i1.contains(ev({1, 1})));
  CHECK_FALSE(i1.contains(ev({2, 0})));
  MonomialIdeal i2 = minimalize(3, {ev({1, 1, 0}), ev({0, 1, 1})});
  bool by_hand = divides(ev({1, 1, 0}), ev({1, 1, 1})) || divides(ev({0, 1, 1}), ev({1, 1, 1}));
  CHECK(by_hand);
  CHECK(i2.contains(ev({1, 1, 1})) == by_hand);
  CHECK_THROWS_AS(i2.contains(ev({1, 1})), ArityError);
}

TEST_CASE("add_generators spec examples") {
  MonomialIdeal i1 = minimalize(2, {ev({1, 1})});
  CHECK(add_generators(i1, {ev({1, 0})}).generators() == std::vector<ExponentVector>{ev({1, 0})});

  MonomialIdeal i2 = minimalize(3, {ev({1, 1, 0}), ev({0, 1, 1})});
  MonomialIdeal i3 = add_generators(i2, {ev({1, 0, 1})});
  CHECK(i3.generators().size() == 3);
  for (const auto& u : i3.generators()) {
    for (const auto& v : i3.generators()) {
      if (!(u == v)) CHECK_FALSE(divides(u, v));  // pairwise incomparable
    }
  }

  MonomialIdeal zero(2);
  CHECK(add_generators(zero, {ev({0, 0})}).is_unit());

  // membership contract: contains(result, b) == contains(I,b) or (exists g <= b)
  SplitMix64 rng(5);
  for (int probe = 0; probe < 100; ++probe) {
    std::vector<int> e(3);
    for (auto& v : e) v = static_cast<int>(rng.below(4));
    ExponentVector b = ev(e);
    CHECK(i3.contains(b) == (i2.contains(b) || divides(ev({1, 0, 1}), b)));
  }
}

TEST_CASE("truncate_at_degree spec examples") {
  MonomialIdeal principal = minimalize(2, {ev({1, 0})});
  MonomialIdeal t2 = truncate_at_degree(principal, 2);
  CHECK(t2.generators() == std::vector<ExponentVector>{ev({1, 1}), ev({2, 0})});

  MonomialIdeal i1 = minimalize(2, {ev({1, 1})});
  CHECK(truncate_at_degree(i1, 1) == i1);

  MonomialIdeal zero(3);
  CHECK(truncate_at_degree(zero, 4).is_zero());
}

TEST_CASE("truncation membership: exhaustive box at n <= 4") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng.below(3));  // n <= 4
    MonomialIdeal ideal = random_ideal(rng.next(), n, 4, 3);
    for (int j = 0; j <= 6; ++j) {
      MonomialIdeal trunc = truncate_at_degree(ideal, j);
      for (const auto& b : box_points(ev(std::vector<int>(static_cast<std::size_t>(n), 4)))) {
        bool expected = ideal.contains(b) && b.total_degree() >= j;
        CHECK(trunc.contains(b) == expected);
      }
    }
  }
}

TEST_CASE("radical spec examples") {
  CHECK(radical(minimalize(2, {ev({2, 1})})).generators() ==
        std::vector<ExponentVector>{ev({1, 1})});
  MonomialIdeal sf = minimalize(3, {ev({1, 1, 0}), ev({0, 1, 1})});
  CHECK(radical(sf) == sf);
  CHECK(radical(minimalize(2, {ev({2, 0}), ev({1, 1})})).generators() ==
        std::vector<ExponentVector>{ev({1, 0})});
  MonomialIdeal any = minimalize(3, {ev({3, 0, 2}), ev({0, 2, 0})});
  CHECK(radical(radical(any)) == radical(any));
}

TEST_CASE("dimension oracle spec examples") {
  CHECK(dimension_oracle(minimalize(2, {ev({1, 1})})) == 1);
  CHECK(dimension_oracle(minimalize(3, {ev({1, 1, 0}), ev({0, 1, 1})})) == 2);
  CHECK(dimension_oracle(MonomialIdeal(4)) == 4);
  CHECK(dimension_oracle(MonomialIdeal::unit(3)) == -1);
}

TEST_CASE("dimension oracle is radical-invariant") {
  SplitMix64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng.below(4));
    MonomialIdeal ideal = random_ideal(rng.next(), n, 6, 3);
    CHECK(dimension_oracle(ideal) == dimension_oracle(radical(ideal)));
  }
}

TEST_CASE("lcm lattice spec examples") {
  auto l1 = lcm_lattice_degrees({minimalize(3, {ev({1, 1, 0}), ev({0, 1, 1})})});
  CHECK(l1 == std::vector<ExponentVector>{ev({0, 1, 1}), ev({1, 1, 0}), ev({1, 1, 1})});
  auto l2 = lcm_lattice_degrees({minimalize(2, {ev({1, 0})})});
  CHECK(l2 == std::vector<ExponentVector>{ev({1, 0})});
  auto l3 = lcm_lattice_degrees({minimalize(2, {ev({1, 0}), ev({0, 1})})});
  CHECK(l3 == std::vector<ExponentVector>{ev({0, 1}), ev({1, 0}), ev({1, 1})});
}

TEST_CASE("lcm lattice is join-closed and contains the generators") {
  SplitMix64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng.below(3));
    MonomialIdeal a = random_ideal(rng.next(), n, 4, 3);
    MonomialIdeal b = random_ideal(rng.next(), n, 3, 3);
    auto lattice = lcm_lattice_degrees({a, b});
    for (const auto& u : a.generators()) {
      CHECK(std::find(lattice.begin(), lattice.end(), u) != lattice.end());
    }
    for (const auto& u : lattice) {
      for (const auto& v : lattice) {
        ExponentVector w = join(u, v);
        CHECK(std::find(lattice.begin(), lattice.end(), w) != lattice.end());
      }
    }
  }
}

TEST_CASE("serialization round-trip is the identity on canonical forms") {
  SplitMix64 rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + static_cast<int>(rng.below(4));
    MonomialIdeal ideal = random_ideal(rng.next(), n, 6, 4);
    std::string text = serialize_ideal(ideal);
    CHECK(parse_ideal(text) == ideal);
    CHECK(serialize_ideal(parse_ideal(text)) == text);
  }
  // permuting the input generators cannot change the canonical bytes
  MonomialIdeal a = minimalize(3, {ev({1, 0, 2}), ev({0, 2, 0}), ev({1, 1, 0})});
  MonomialIdeal b = minimalize(3, {ev({0, 2, 0}), ev({1, 1, 0}), ev({1, 0, 2})});
  CHECK(serialize_ideal(a) == serialize_ideal(b));
}

#include <doctest.h>

#include <algorithm>

#include "skel/random_ideal.hpp"
#include "skel/skeleton.hpp"

using namespace skel;

namespace {

ExponentVector ev(std::vector<int> e) { return ExponentVector(std::move(e)); }

ExponentVector ones(int n) { return ev(std::vector<int>(static_cast<std::size_t>(n), 1)); }

// Independent simplicial oracle: the Stanley-Reisner ideal of the j-skeleton
// {F in Delta : |F| <= j}, built by listing faces and minimalizing non-faces.
MonomialIdeal skeleton_complex_ideal(const MonomialIdeal& squarefree, int j) {
  const int n = squarefree.arity();
  std::vector<ExponentVector> nonfaces;
  for (std::uint32_t w = 0; w < (1u << n); ++w) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    for (int k = 0; k < n; ++k) {
      if (w & (1u << k)) e[static_cast<std::size_t>(k)] = 1;
    }
    ExponentVector face = ev(e);
    bool in_complex = !squarefree.contains(face) && face.total_degree() <= j;
    if (!in_complex) nonfaces.push_back(face);
  }
  return minimalize(n, nonfaces);
}

}  // namespace

TEST_CASE("skeleton_ideal spec examples") {
  MonomialIdeal e2 = minimalize(3, {ev({1, 1, 0}), ev({0, 1, 1})});
  ExponentVector g = ones(3);
  CHECK(skeleton_ideal(e2, g, 1) ==
        minimalize(3, {ev({1, 1, 0}), ev({0, 1, 1}), ev({1, 0, 1})}));
  CHECK(skeleton_ideal(e2, g, 0) ==
        minimalize(3, {ev({1, 0, 0}), ev({0, 1, 0}), ev({0, 0, 1})}));
  CHECK(skeleton_ideal(e2, g, 2) == e2);
  CHECK_THROWS_AS(skeleton_ideal(e2, g, 3), PreconditionError);
  CHECK_THROWS_AS(skeleton_ideal(e2, g, -1), PreconditionError);
  CHECK_THROWS_AS(skeleton_ideal(e2, ev({1, 1, 0}), 1), PreconditionError);  // g(3) = 0
  CHECK_THROWS_AS(skeleton_ideal(MonomialIdeal::unit(3), g, 0), PreconditionError);
}

TEST_CASE("skeleton_chain spec examples") {
  MonomialIdeal e1 = minimalize(2, {ev({1, 1})});
  SkeletonChain c1 = skeleton_chain(e1, ones(2));
  CHECK(c1.d == 1);
  CHECK(c1.ideals[1] == e1);
  CHECK(c1.ideals[0] == minimalize(2, {ev({1, 0}), ev({0, 1})}));

  MonomialIdeal e2 = minimalize(3, {ev({1, 1, 0}), ev({0, 1, 1})});
  SkeletonChain c2 = skeleton_chain(e2, ones(3));
  CHECK(c2.d == 2);
  CHECK(c2.ideals[2] == e2);
  CHECK(c2.ideals[1] == minimalize(3, {ev({1, 1, 0}), ev({0, 1, 1}), ev({1, 0, 1})}));
  CHECK(c2.ideals[0] == minimalize(3, {ev({1, 0, 0}), ev({0, 1, 0}), ev({0, 0, 1})}));
}

TEST_CASE("squarefree chains match the simplicial skeleton oracle") {
  // the 4-cycle complex: vertices 1..4, edges 12,23,34,14
  MonomialIdeal four_cycle = minimalize(4, {ev({1, 0, 1, 0}), ev({0, 1, 0, 1})});
  SkeletonChain chain = skeleton_chain(four_cycle, ones(4));
  CHECK(chain.d == 2);
  for (int j = 0; j <= chain.d; ++j) {
    CHECK(chain.ideals[static_cast<std::size_t>(j)] == skeleton_complex_ideal(four_cycle, j));
  }

  SplitMix64 rng(2001);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng.below(4));  // n <= 5
    MonomialIdeal ideal = random_ideal(rng.next(), n, 5, 1);  // squarefree
    SkeletonChain c = skeleton_chain(ideal, ones(n));
    for (int j = 0; j <= c.d; ++j) {
      CHECK(c.ideals[static_cast<std::size_t>(j)] == skeleton_complex_ideal(ideal, j));
    }
  }
}

TEST_CASE("chain dimensions and nesting on a random suite") {
  SplitMix64 rng(2002);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng.below(4));
    MonomialIdeal ideal = random_ideal(rng.next(), n, 6, 3);
    ExponentVector g = skeleton_admissible_g(ideal);
    SkeletonChain chain = skeleton_chain(ideal, g);
    MonomialIdeal ring = MonomialIdeal::unit(n);
    CHECK(chain.ideals[static_cast<std::size_t>(chain.d)] == ideal);
    for (int j = 0; j <= chain.d; ++j) {
      CHECK(dimension_from_poset(build_poset(chain.ideals[static_cast<std::size_t>(j)], ring,
                                             g)) == j);
      if (j >= 1) {
        CHECK(chain.ideals[static_cast<std::size_t>(j) - 1].contains_ideal(
            chain.ideals[static_cast<std::size_t>(j)]));
      }
    }
    // nested-computation consistency: (I_{d-1})_j = I_j
    if (chain.d >= 1) {
      const MonomialIdeal& next = chain.ideals[static_cast<std::size_t>(chain.d) - 1];
      for (int j = 0; j < chain.d; ++j) {
        CHECK(skeleton_ideal(next, g, j) == chain.ideals[static_cast<std::size_t>(j)]);
      }
    }
  }
}

TEST_CASE("layer_decomposition spec examples") {
  MonomialIdeal e2 = minimalize(3, {ev({1, 1, 0}), ev({0, 1, 1})});
  auto layer2 = layer_decomposition(e2, ones(3), 2);
  REQUIRE(layer2.size() == 1);
  CHECK(layer2[0].b_min == ev({1, 0, 1}));
  CHECK(layer2[0].z_vars == std::vector<int>{0, 2});
  CHECK(layer2[0].ann == minimalize(3, {ev({0, 1, 0})}));

  MonomialIdeal e1 = minimalize(2, {ev({1, 1})});
  auto layer1 = layer_decomposition(e1, ones(2), 1);
  REQUIRE(layer1.size() == 2);
  CHECK(layer1[0].b_min == ev({0, 1}));
  CHECK(layer1[0].z_vars == std::vector<int>{1});
  CHECK(layer1[0].ann == minimalize(2, {ev({1, 0})}));
  CHECK(layer1[1].b_min == ev({1, 0}));
  CHECK(layer1[1].z_vars == std::vector<int>{0});
  CHECK(layer1[1].ann == minimalize(2, {ev({0, 1})}));

  // the zero ideal: the top layer is S itself (free), zero annihilator
  MonomialIdeal zero(2);
  auto free_layer = layer_decomposition(zero, ones(2), 2);
  REQUIRE(free_layer.size() == 1);
  CHECK(free_layer[0].b_min == ev({1, 1}));
  CHECK(free_layer[0].z_vars == std::vector<int>{0, 1});
  CHECK(free_layer[0].ann.is_zero());
}

TEST_CASE("layer summand invariants on a random suite") {
  SplitMix64 rng(2003);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + static_cast<int>(rng.below(3));
    MonomialIdeal ideal = random_ideal(rng.next(), n, 5, 3);
    ExponentVector g = skeleton_admissible_g(ideal);
    SkeletonChain chain = skeleton_chain(ideal, g);
    for (int j = 0; j <= chain.d; ++j) {
      auto summands = layer_decomposition(ideal, g, j);
      CHECK_FALSE(summands.empty());
      for (const auto& s : summands) {
        // b_min touches g exactly on Z
        CHECK(z_set(s.b_min, g) == s.z_vars);
        CHECK(static_cast<int>(s.z_vars.size()) == j);
        // annihilator generators avoid the Z variables
        for (const auto& m : s.ann.generators()) {
          for (int k : s.z_vars) CHECK(m[k] == 0);
        }
        // a pure power of every Y variable lies in the annihilator
        for (int k : y_set(s.b_min, g)) {
          std::vector<int> e(static_cast<std::size_t>(n), 0);
          e[static_cast<std::size_t>(k)] = g[k] - s.b_min[k];
          CHECK(s.ann.contains(ev(e)));
        }
        CHECK(dimension_oracle(s.ann) == j);
      }
    }
  }
}

TEST_CASE("verify_layer_direct_sum spec examples") {
  MonomialIdeal e2 = minimalize(3, {ev({1, 1, 0}), ev({0, 1, 1})});
  auto report2 = verify_layer_direct_sum(e2, ones(3), 2, layer_decomposition(e2, ones(3), 2));
  CHECK(report2.direct);
  CHECK(report2.covers);

  MonomialIdeal e1 = minimalize(2, {ev({1, 1})});
  auto report1 = verify_layer_direct_sum(e1, ones(2), 1, layer_decomposition(e1, ones(2), 1));
  CHECK(report1.direct);
  CHECK(report1.covers);

  SplitMix64 rng(2004);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + static_cast<int>(rng.below(4));  // n <= 5
    MonomialIdeal ideal = random_ideal(rng.next(), n, 5, 1);  // squarefree
    ExponentVector g = ones(n);
    SkeletonChain chain = skeleton_chain(ideal, g);
    for (int j = 0; j <= chain.d; ++j) {
      auto report = verify_layer_direct_sum(ideal, g, j, layer_decomposition(ideal, g, j));
      CHECK(report.direct);
      CHECK(report.covers);
    }
  }
}

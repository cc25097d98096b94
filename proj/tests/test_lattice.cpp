#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "doctest.h"
#include "varlat/error.hpp"
#include "varlat/lattice.hpp"

namespace lat = varlat::lattice;
using lat::FiniteLattice;
using varlat::Error;
using varlat::errc;

namespace {

FiniteLattice chain(int length) {
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i + 1 < length; ++i) covers.emplace_back(i, i + 1);
  return FiniteLattice::from_covers(static_cast<std::size_t>(length), covers);
}

// 0 < a < c < 1 and 0 < b < 1, indices 0 a b c 1.
FiniteLattice pentagon() {
  const std::vector<std::pair<int, int>> covers{{0, 1}, {1, 3}, {3, 4}, {0, 2}, {2, 4}};
  return FiniteLattice::from_covers(5, covers, {"0", "a", "b", "c", "1"});
}

FiniteLattice diamond() {
  const std::vector<std::pair<int, int>> covers{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}};
  return FiniteLattice::from_covers(5, covers, {"0", "a", "b", "c", "1"});
}

FiniteLattice cube(int dims) {
  FiniteLattice out = chain(2);
  for (int i = 1; i < dims; ++i) out = lat::direct_product(out, chain(2));
  return out;
}

int index_of_label(const FiniteLattice& l, const std::string& name) {
  for (std::size_t i = 0; i < l.size(); ++i)
    if (l.label(static_cast<int>(i)) == name) return static_cast<int>(i);
  return -1;
}

}  // namespace

TEST_CASE("two-chain order data") {
  const auto l = chain(2);
  CHECK(l.size() == 2);
  CHECK(l.leq(0, 1));
  CHECK_FALSE(l.leq(1, 0));
  int true_entries = 0;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      if (l.leq(x, y)) ++true_entries;
  CHECK(true_entries == 3);
  CHECK(l.meet(0, 1) == 0);
  CHECK(l.join(0, 1) == 1);
  CHECK(l.bottom() == 0);
  CHECK(l.top() == 1);
  CHECK(l.atoms() == std::vector<int>{1});
  CHECK(l.covers() == std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("one-element lattice is allowed, the empty one is not") {
  const auto l = FiniteLattice::from_covers(1, {});
  CHECK(l.size() == 1);
  CHECK(l.bottom() == l.top());
  CHECK_THROWS_AS(FiniteLattice::from_covers(0, {}), Error);
}

TEST_CASE("pentagon operations and element classes") {
  const auto l = pentagon();
  const int a = index_of_label(l, "a");
  const int b = index_of_label(l, "b");
  const int c = index_of_label(l, "c");
  CHECK(l.join(a, b) == l.top());
  CHECK(l.meet(c, b) == l.bottom());
  CHECK(l.meet(a, c) == a);

  const auto rows = lat::classify_all(l);
  const auto& at_a = rows[static_cast<std::size_t>(a)];
  const auto& at_b = rows[static_cast<std::size_t>(b)];
  const auto& at_c = rows[static_cast<std::size_t>(c)];

  CHECK_FALSE(at_b.modular);
  CHECK_FALSE(at_b.cancellable);
  CHECK_FALSE(at_b.standard);
  CHECK(at_b.distributive);
  CHECK_FALSE(at_b.neutral);

  CHECK(at_a.modular);
  CHECK(at_a.cancellable);
  CHECK_FALSE(at_a.standard);
  CHECK_FALSE(at_a.distributive);
  CHECK_FALSE(at_a.neutral);

  CHECK(at_c.modular);
  CHECK(at_c.cancellable);
  CHECK(at_c.standard);
  CHECK(at_c.distributive);
  CHECK_FALSE(at_c.neutral);

  for (const int edge : {l.bottom(), l.top()}) {
    const auto& row = rows[static_cast<std::size_t>(edge)];
    CHECK(row.neutral);
    CHECK(row.distributive);
    CHECK(row.standard);
    CHECK(row.modular);
    CHECK(row.cancellable);
  }
  CHECK_FALSE(lat::is_distributive_lattice(l));
}

TEST_CASE("diamond interior elements are modular but nothing stronger") {
  const auto l = diamond();
  CHECK_FALSE(lat::is_distributive_lattice(l));
  for (const auto& row : lat::classify_all(l)) {
    CHECK(row.modular);
    if (row.element == l.bottom() || row.element == l.top()) {
      CHECK(row.cancellable);
      CHECK(row.neutral);
    } else {
      CHECK_FALSE(row.cancellable);
      CHECK_FALSE(row.standard);
      CHECK_FALSE(row.distributive);
      CHECK_FALSE(row.neutral);
    }
  }
}

TEST_CASE("boolean cube elements are neutral throughout") {
  const auto l = cube(3);
  CHECK(l.size() == 8);
  CHECK(l.atoms().size() == 3);
  CHECK(lat::is_distributive_lattice(l));
  for (const auto& row : lat::classify_all(l)) {
    CHECK(row.neutral);
    CHECK(row.distributive);
    CHECK(row.standard);
    CHECK(row.modular);
    CHECK(row.cancellable);
  }
}

TEST_CASE("cover data validation") {
  const std::vector<std::pair<int, int>> no_top{{0, 1}, {0, 2}};
  try {
    static_cast<void>(FiniteLattice::from_covers(3, no_top));
    FAIL("expected a lattice violation");
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_a_lattice);
  }

  const std::vector<std::pair<int, int>> two_bottoms{{0, 2}, {0, 3}, {1, 2}, {1, 3}};
  try {
    static_cast<void>(FiniteLattice::from_covers(4, two_bottoms));
    FAIL("expected a lattice violation");
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_a_lattice);
  }

  const std::vector<std::pair<int, int>> loop{{0, 1}, {1, 0}};
  try {
    static_cast<void>(FiniteLattice::from_covers(2, loop));
    FAIL("expected a cycle");
  } catch (const Error& e) {
    CHECK(e.code() == errc::cycle_detected);
  }

  const std::vector<std::pair<int, int>> out_of_range{{0, 5}};
  CHECK_THROWS_AS(static_cast<void>(FiniteLattice::from_covers(2, out_of_range)), Error);
}

TEST_CASE("order matrix construction agrees with cover construction") {
  const auto original = pentagon();
  const std::size_t n = original.size();
  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      leq[x * n + y] = original.leq(static_cast<int>(x), static_cast<int>(y)) ? 1 : 0;
  const auto rebuilt = FiniteLattice::from_leq(n, leq, original.labels());
  CHECK(rebuilt.covers() == original.covers());
  CHECK(rebuilt.bottom() == original.bottom());
  CHECK(rebuilt.top() == original.top());

  std::vector<std::uint8_t> not_reflexive(4, 0);
  not_reflexive[0 * 2 + 1] = 1;
  CHECK_THROWS_AS(static_cast<void>(FiniteLattice::from_leq(2, not_reflexive)), Error);
}

TEST_CASE("products and a new top") {
  const auto p = lat::direct_product(chain(2), chain(3));
  CHECK(p.size() == 6);
  CHECK(p.atoms().size() == 2);
  CHECK(lat::is_distributive_lattice(p));

  const auto m = diamond();
  const auto lifted = lat::adjoin_top(m);
  CHECK(lifted.size() == m.size() + 1);
  CHECK(lifted.bottom() == m.bottom());
  const int new_top = lifted.top();
  const auto covers = lifted.covers();
  CHECK(std::count(covers.begin(), covers.end(), std::make_pair(m.top(), new_top)) == 1);
}

TEST_CASE("principal filters and sublattice closures") {
  const auto l = pentagon();
  const int a = index_of_label(l, "a");
  const int b = index_of_label(l, "b");
  const int c = index_of_label(l, "c");
  CHECK(lat::principal_filter(l, a) == std::vector<int>{a, c, l.top()});
  auto closed = lat::sublattice_closure(l, {a, b});
  std::sort(closed.begin(), closed.end());
  CHECK(closed == std::vector<int>{l.bottom(), a, b, l.top()});
}

TEST_CASE("neutrality agrees with the generated-sublattice reading") {
  for (const auto& l : {chain(4), pentagon(), diamond(), cube(2), cube(3)}) {
    const auto rows = lat::classify_all(l);
    for (const auto& row : rows)
      CHECK(row.neutral == lat::neutral_via_generated_sublattice(l, row.element));
  }
}

TEST_CASE("neutral atom conditions") {
  const auto cube_report = lat::verify_neutral_atom_conditions(cube(3));
  CHECK(cube_report.neutral_atoms.size() == 3);
  CHECK(cube_report.violations.empty());

  const auto pentagon_report = lat::verify_neutral_atom_conditions(pentagon());
  CHECK(pentagon_report.neutral_atoms.empty());
  CHECK(pentagon_report.violations.empty());

  const auto chain_report = lat::verify_neutral_atom_conditions(chain(3));
  CHECK(chain_report.neutral_atoms == std::vector<int>{1});
  CHECK(chain_report.violations.empty());
}

TEST_CASE("random lattices are deterministic in the seed and always valid") {
  std::mt19937_64 first(99);
  std::mt19937_64 second(99);
  for (int i = 0; i < 30; ++i) {
    const auto a = lat::random_lattice(first, 9);
    const auto b = lat::random_lattice(second, 9);
    CHECK(a.size() == b.size());
    CHECK(a.covers() == b.covers());
    CHECK(a.size() >= 1);
    CHECK(a.size() <= 9);
    for (std::size_t x = 0; x < a.size(); ++x) {
      CHECK(a.leq(a.bottom(), static_cast<int>(x)));
      CHECK(a.leq(static_cast<int>(x), a.top()));
    }
  }

  std::mt19937_64 other(100);
  bool any_difference = false;
  for (int i = 0; i < 10 && !any_difference; ++i) {
    std::mt19937_64 replay(99);
    any_difference = lat::random_lattice(other, 9).covers() !=
                     lat::random_lattice(replay, 9).covers();
  }
  CHECK(any_difference);
}

TEST_CASE("isomorphism search finds relabelings and rejects different shapes") {
  const auto l = pentagon();
  const int perm[] = {2, 0, 3, 1, 4};
  std::vector<std::pair<int, int>> relabeled_covers;
  for (const auto& [low, high] : l.covers())
    relabeled_covers.emplace_back(perm[low], perm[high]);
  const auto relabeled = FiniteLattice::from_covers(5, relabeled_covers);

  const auto image = lat::are_isomorphic(l, relabeled);
  REQUIRE(image.has_value());
  for (std::size_t x = 0; x < l.size(); ++x)
    for (std::size_t y = 0; y < l.size(); ++y)
      CHECK(l.leq(static_cast<int>(x), static_cast<int>(y)) ==
            relabeled.leq((*image)[x], (*image)[y]));

  CHECK_FALSE(lat::are_isomorphic(pentagon(), diamond()).has_value());
  CHECK(lat::are_isomorphic(cube(2), lat::direct_product(chain(2), chain(2))).has_value());
}

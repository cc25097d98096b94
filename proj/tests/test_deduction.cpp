#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "doctest.h"
#include "varlat/deduction.hpp"
#include "varlat/error.hpp"
#include "varlat/words.hpp"

namespace d = varlat::deduce;
namespace w = varlat::words;
using varlat::Error;
using varlat::errc;
using d::Basis;
using d::RWord;
using w::Word;

namespace {

Word wd(const char* text) { return w::parse_word(text); }

Basis basis_of(std::initializer_list<const char*> texts) {
  Basis b;
  for (const char* t : texts) b.identities.push_back(w::parse_identity(t));
  return b;
}

}  // namespace

TEST_CASE("rewrite words and the absorbing zero") {
  CHECK(d::render_rword(RWord::make_zero()) == "0");
  CHECK(d::render_rword(RWord::of(wd("x y"))) == "x y");
  CHECK(RWord::make_zero() == RWord::make_zero());
  CHECK(RWord::of(wd("x")) != RWord::make_zero());
}

TEST_CASE("zero ideal membership") {
  const std::vector<Word> zeros{wd("x x")};
  const auto hit = d::zero_member(zeros, wd("y x x y"));
  REQUIRE(hit.has_value());
  CHECK(hit->basis_index == 0);
  CHECK(hit->embedding.left_context == std::vector<std::string>{"y"});
  CHECK(hit->embedding.right_context == std::vector<std::string>{"y"});

  CHECK_FALSE(d::zero_member(zeros, wd("x y")).has_value());
  CHECK(d::zero_member(zeros, wd("x y x y")).has_value());
}

TEST_CASE("single rewrite steps") {
  const auto commute = basis_of({"x y = y x"});
  const auto from_xy = d::one_step_rewrites(RWord::of(wd("a b")), commute, 4);
  const RWord swapped{false, {"b", "a"}};
  CHECK(std::count_if(from_xy.begin(), from_xy.end(),
                      [&](const d::RewriteStep& s) { return s.result == swapped; }) >= 1);

  const auto square_zero = basis_of({"x x = 0"});
  const auto from_square = d::one_step_rewrites(RWord::of(wd("y x x y")), square_zero, 6);
  CHECK(std::any_of(from_square.begin(), from_square.end(),
                    [](const d::RewriteStep& s) { return s.result.zero; }));

  const auto absorbed = d::one_step_rewrites(RWord::make_zero(), commute, 4);
  CHECK(absorbed.empty());
}

TEST_CASE("rewrite results respect the size bound") {
  const auto stretch = basis_of({"x = x x"});
  for (const auto& step : d::one_step_rewrites(RWord::of(wd("x x")), stretch, 2))
    CHECK(step.result.letters.size() <= 2);
  const auto wide = d::one_step_rewrites(RWord::of(wd("x x")), stretch, 3);
  CHECK(std::any_of(wide.begin(), wide.end(), [](const d::RewriteStep& s) {
    return s.result.letters.size() == 3;
  }));
}

TEST_CASE("literal zero convention proves collapses without the zero element") {
  const auto square_zero = basis_of({"x x = 0"});
  const auto steps = d::one_step_rewrites(RWord::of(wd("x x x")), square_zero, 4,
                                          d::ZeroConvention::literal);
  CHECK(!steps.empty());
  for (const auto& step : steps) CHECK_FALSE(step.result.zero);
  const RWord shorter{false, {"x", "x"}};
  CHECK(std::any_of(steps.begin(), steps.end(),
                    [&](const d::RewriteStep& s) { return s.result == shorter; }));

  const auto res = d::derive(square_zero, w::parse_identity("x x x = x x"), 8, std::nullopt,
                             d::ZeroConvention::literal);
  CHECK(res.proved);

  CHECK_THROWS_AS(static_cast<void>(d::derive(square_zero, w::parse_identity("x x = 0"), 8,
                                              std::nullopt, d::ZeroConvention::literal)),
                  Error);
}

TEST_CASE("derivations with replayable traces") {
  const auto commute = basis_of({"x y = y x"});
  const auto res = d::derive(commute, w::parse_identity("a b = b a"));
  REQUIRE(res.proved);
  REQUIRE(res.trace.has_value());
  CHECK(res.trace->start == RWord::of(wd("a b")));
  CHECK(res.trace->last() == RWord::of(wd("b a")));
  CHECK(d::replay(commute, *res.trace));

  const auto pair_zero = basis_of({"x1 x2 = 0"});
  const auto squared = d::derive(pair_zero, w::parse_identity("x x = 0"));
  REQUIRE(squared.proved);
  CHECK(squared.trace->last() == RWord::make_zero());
  CHECK(d::replay(pair_zero, *squared.trace));

  const auto trivial = d::derive(commute, w::parse_identity("a b = a b"));
  CHECK(trivial.proved);
  CHECK(trivial.trace->steps.empty());
}

TEST_CASE("underivable goals stay unproved") {
  const auto nil3 = basis_of({"x1 x2 x3 = 0"});
  const auto res = d::derive(nil3, w::parse_identity("x y = y x"));
  CHECK_FALSE(res.proved);
  CHECK_FALSE(res.trace.has_value());
}

TEST_CASE("tampered traces are rejected on replay") {
  const auto commute = basis_of({"x y = y x"});
  const auto res = d::derive(commute, w::parse_identity("a b = b a"));
  REQUIRE(res.proved);

  auto flipped_word = *res.trace;
  flipped_word.steps.back().word = RWord::of(wd("a a"));
  CHECK_FALSE(d::replay(commute, flipped_word));

  auto flipped_rule = *res.trace;
  flipped_rule.steps.back().rule_index = 7;
  CHECK_FALSE(d::replay(commute, flipped_rule));

  auto flipped_context = *res.trace;
  flipped_context.steps.back().left_context.push_back("a");
  CHECK_FALSE(d::replay(commute, flipped_context));
}

TEST_CASE("trace permutations compose left to right") {
  const auto pi = varlat::perm::Permutation::from_cycles(3, "(12)");
  const Basis swap12{{w::permutation_identity(3, pi)}};
  const auto res = d::derive(swap12, w::permutation_identity(3, pi));
  REQUIRE(res.proved);
  const auto carried = d::trace_permutation(*res.trace);
  REQUIRE(carried.has_value());
  CHECK(*carried == pi);

  const auto direct = d::permutation_between(wd("x1 x2 x3"), wd("x3 x1 x2"));
  REQUIRE(direct.has_value());
  CHECK(*direct == varlat::perm::Permutation({3, 1, 2}));
  CHECK_FALSE(d::permutation_between(wd("x1 x2"), wd("x1 x1")).has_value());
}

// One pair rule plus one nil rule, classified by hand over the window of
// words on three letters up to length four: every length-4 word collapses,
// the six two-letter instances of the pair rule merge, everything else is
// alone in its class. 120 words plus the zero element fall into 34 classes.
TEST_CASE("bounded rewrite components match the hand census") {
  const auto basis = basis_of({"x1 x2 x3 x4 = 0", "x x y = x y x"});
  const std::vector<std::string> alphabet{"x", "y", "z"};

  std::vector<RWord> universe{RWord::make_zero()};
  std::vector<std::vector<std::string>> frontier{{}};
  for (int len = 1; len <= 4; ++len) {
    std::vector<std::vector<std::string>> next;
    for (const auto& stem : frontier)
      for (const auto& letter : alphabet) {
        auto word = stem;
        word.push_back(letter);
        universe.push_back(RWord{false, word});
        next.push_back(std::move(word));
      }
    frontier = std::move(next);
  }
  REQUIRE(universe.size() == 1 + 3 + 9 + 27 + 81);

  std::map<RWord, std::size_t> ids;
  for (std::size_t i = 0; i < universe.size(); ++i) ids.emplace(universe[i], i);

  std::vector<std::size_t> parent(universe.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  const std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };

  for (const auto& word : universe) {
    if (word.zero) continue;
    for (const auto& step : d::one_step_rewrites(word, basis, 4)) {
      const auto it = ids.find(step.result);
      REQUIRE(it != ids.end());
      parent[find(ids.at(word))] = find(it->second);
    }
  }

  std::map<std::size_t, int> class_sizes;
  for (std::size_t i = 0; i < universe.size(); ++i) ++class_sizes[find(i)];
  CHECK(class_sizes.size() == 34);

  const auto same_class = [&](const char* a, const char* b) {
    return find(ids.at(RWord::of(wd(a)))) == find(ids.at(RWord::of(wd(b))));
  };
  CHECK(same_class("x x y", "x y x"));
  CHECK(same_class("z z y", "z y z"));
  CHECK_FALSE(same_class("y x x", "x x y"));
  CHECK(class_sizes.at(find(ids.at(RWord::of(wd("y x x"))))) == 1);
  CHECK(class_sizes.at(find(ids.at(RWord::of(wd("x x y"))))) == 2);
  CHECK(class_sizes.at(find(ids.at(RWord::make_zero()))) == 82);

  const auto proved = d::derive(basis, w::parse_identity("x x y = x y x"));
  CHECK(proved.proved);
  const auto unproved = d::derive(basis, w::parse_identity("y x x = x x y"));
  CHECK_FALSE(unproved.proved);
}

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "varlat/error.hpp"

namespace varlat::perm {

// Permutations of {1..n} for small n. The action is written on the right:
// compose(p, q) maps i to (i p) q, i.e. p is applied first.
class Permutation {
public:
  explicit Permutation(std::vector<int> images_one_indexed);

  static Permutation identity(int degree);

  // Parses disjoint (or not) cycle notation such as "(123)", "(12)(34)" or
  // "e" for the identity. Points are single decimal digits; degree <= 9.
  static Permutation from_cycles(int degree, std::string_view text);

  int degree() const { return static_cast<int>(image_.size()); }
  int apply(int point) const { return image_[static_cast<std::size_t>(point - 1)]; }
  bool is_identity() const;

  Permutation inverse() const;

  std::string to_cycles() const;

  const std::vector<int>& images() const { return image_; }

  friend Permutation compose(const Permutation& p, const Permutation& q);

  auto operator<=>(const Permutation&) const = default;

private:
  std::vector<int> image_;  // image_[i-1] = image of i, values in 1..n
};

Permutation compose(const Permutation& p, const Permutation& q);

// A subgroup of S_n held as its full, canonically sorted member list.
class Subgroup {
public:
  Subgroup(int degree, std::vector<Permutation> members);

  static Subgroup trivial(int degree);
  static Subgroup symmetric(int degree);
  static Subgroup alternating(int degree);
  static Subgroup closure(int degree, std::span<const Permutation> generators);

  int degree() const { return degree_; }
  int order() const { return static_cast<int>(members_.size()); }
  const std::vector<Permutation>& members() const { return members_; }
  bool contains(const Permutation& p) const;
  bool contains(const Subgroup& other) const;

  auto operator<=>(const Subgroup&) const = default;

private:
  int degree_;
  std::vector<Permutation> members_;
};

Subgroup subgroup_meet(const Subgroup& a, const Subgroup& b);
Subgroup subgroup_join(const Subgroup& a, const Subgroup& b);

// Every subgroup of S_n, canonically ordered by (order, member list).
// Degree is capped at 5; larger symmetric groups are rejected.
std::vector<Subgroup> all_subgroups(int degree);

// Conventional name of a subgroup where one exists (T, S4, A4, T12, C123,
// C1234, P12,34, V4, Stab4(1)); empty string otherwise.
std::string conventional_name(const Subgroup& g);

// Names for a canonically ordered family: conventional names where they
// exist, otherwise "G<order>_<k>" numbered within each order class.
std::vector<std::string> name_subgroups(const std::vector<Subgroup>& groups);

// Display name for a subgroup on its own: conventional or "G<order>".
std::string display_name(const Subgroup& g);

}  // namespace varlat::perm

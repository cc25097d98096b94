#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "varlat/error.hpp"

namespace varlat::lattice {

// A finite lattice over elements 0..n-1, stored as a dense order matrix
// with precomputed meet and join tables. Construction validates that the
// cover data describes a lattice and reports CycleDetected or NotALattice
// otherwise. The one-element lattice is allowed; the empty one is not.
class FiniteLattice {
public:
  static FiniteLattice from_covers(std::size_t n,
                                   std::span<const std::pair<int, int>> covers,
                                   std::vector<std::string> labels = {});

  // Builds directly from a reflexive partial order given as a dense matrix.
  static FiniteLattice from_leq(std::size_t n, std::vector<std::uint8_t> leq,
                                std::vector<std::string> labels = {});

  std::size_t size() const { return n_; }
  bool leq(int x, int y) const {
    return leq_[static_cast<std::size_t>(x) * n_ + static_cast<std::size_t>(y)] != 0;
  }
  int meet(int x, int y) const {
    return meet_[static_cast<std::size_t>(x) * n_ + static_cast<std::size_t>(y)];
  }
  int join(int x, int y) const {
    return join_[static_cast<std::size_t>(x) * n_ + static_cast<std::size_t>(y)];
  }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  bool has_labels() const { return !labels_.empty(); }
  std::string label(int x) const;
  const std::vector<std::string>& labels() const { return labels_; }

  std::vector<std::pair<int, int>> covers() const;  // (lower, upper)
  std::vector<int> atoms() const;

private:
  FiniteLattice() = default;
  void compute_tables();

  std::size_t n_ = 0;
  std::vector<std::uint8_t> leq_;
  std::vector<int> meet_, join_;
  std::vector<std::string> labels_;
  int bottom_ = 0, top_ = 0;
};

struct ElementClassification {
  int element = 0;
  bool neutral = false;
  bool distributive = false;
  bool standard = false;
  bool modular = false;
  bool cancellable = false;
};

ElementClassification classify_element(const FiniteLattice& l, int x);
std::vector<ElementClassification> classify_all(const FiniteLattice& l);

// Elements above a, inclusive, in ascending index order.
std::vector<int> principal_filter(const FiniteLattice& l, int a);

bool is_distributive_lattice(const FiniteLattice& l);

FiniteLattice direct_product(const FiniteLattice& a, const FiniteLattice& b);
FiniteLattice adjoin_top(const FiniteLattice& l);

// Smallest subset containing `seed` and closed under meet and join.
std::vector<int> sublattice_closure(const FiniteLattice& l, std::vector<int> seed);

// Alternative reading of neutrality, used to cross-check classify_element:
// x is neutral iff every sublattice generated by {x, y, z} is distributive.
bool neutral_via_generated_sublattice(const FiniteLattice& l, int x);

// Isomorphism search with invariant pruning; returns the image of each
// element of a under a lattice isomorphism onto b, if one exists.
std::optional<std::vector<int>> are_isomorphic(const FiniteLattice& a,
                                               const FiniteLattice& b);

// For each neutral atom a, checks that the following agree for every x:
// (a) x is cancellable, (b) x v a is cancellable, (c) the cancellation
// implication for x holds with both test elements in the filter of a.
struct NeutralAtomReport {
  struct Violation {
    int atom = 0;
    int x = 0;
    std::string detail;
  };
  std::vector<int> neutral_atoms;
  std::vector<Violation> violations;
};

NeutralAtomReport verify_neutral_atom_conditions(const FiniteLattice& l);

// Deterministic rejection sampler over random cover relations; always
// returns a valid lattice with 1..max_size elements.
FiniteLattice random_lattice(std::mt19937_64& rng, int max_size);

}  // namespace varlat::lattice

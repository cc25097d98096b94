#pragma once

#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "varlat/deduction.hpp"
#include "varlat/lattice.hpp"
#include "varlat/perm.hpp"
#include "varlat/words.hpp"

namespace varlat::variety {

// Sentinel for an unbounded index; compares above every finite value.
inline constexpr int kInf = std::numeric_limits<int>::max();

std::string index_to_string(int v);

// A variety of (unary) semigroups given by one of the supported recipes.
//
//   trivial            one-element semigroups
//   family_x(m, n)     nil variety with square letters kept apart:
//                      x2y = xyx = yx2 = 0, full permutativity from length m,
//                      every word of length >= n collapsing to zero
//   family_y(m, n)     family_x(m, n) with x2 = 0 adjoined
//   subgroup_derived   words of length > n are zero, length-n words with a
//                      repeated letter are zero, and length-n linear words
//                      are identified along a subgroup G <= S_n
//   raw_basis          an explicit finite identity basis; only bounded
//                      deduction is available, so most operations reject it
//
// family_y(2, 2) coincides with family_x(2, 2) and is canonicalized to it.
class VarietyHandle {
public:
  enum class Kind { trivial, family_x, family_y, subgroup_derived, raw_basis };

  static VarietyHandle trivial();
  static VarietyHandle family_x(int m, int n);
  static VarietyHandle family_y(int m, int n);
  static VarietyHandle subgroup_derived(perm::Subgroup g, int n);
  static VarietyHandle raw_basis(deduce::Basis basis);

  Kind kind() const { return kind_; }
  int m() const { return m_; }
  int n() const { return n_; }
  const perm::Subgroup& group() const;
  const deduce::Basis& basis() const;

  bool is_family() const { return kind_ == Kind::family_x || kind_ == Kind::family_y; }
  // Whether x^2 = 0 holds (family_x(2,2) satisfies it by length alone).
  bool square_is_zero() const;

  std::string to_string() const;

  bool operator==(const VarietyHandle& o) const;

private:
  VarietyHandle() = default;
  Kind kind_ = Kind::trivial;
  int m_ = 0, n_ = 0;
  std::optional<perm::Subgroup> group_;
  std::shared_ptr<const deduce::Basis> basis_;
};

// Handle syntax: "T", "X:m,n", "Y:m,n" with n (or m) possibly "inf",
// "D:n:(123)" or "D:4:(12);(34)" with ';'-separated generators.
VarietyHandle parse_handle(std::string_view text);

struct NormalForm {
  bool zero = false;
  std::vector<std::string> letters;

  bool operator==(const NormalForm&) const = default;
};

// Canonical representative of w in the relatively free semigroup of the
// handle. Rejects raw_basis handles.
NormalForm normal_form(const VarietyHandle& v, const words::Word& w);

// Whether the identity holds in the variety. For raw_basis handles this is
// only a semidecision: a bounded derivation proves it, anything else is
// reported as Undecided.
bool holds(const VarietyHandle& v, const words::Identity& id);

// Finite identity basis defining the handle, used to feed the deduction
// engine.
deduce::Basis defining_basis(const VarietyHandle& v);

// The relatively free semigroup on k generators, materialized as a
// multiplication table over canonical representatives. Element 0 is the
// zero element ("0"); generators are x1..xk.
struct FreeObject {
  int generators = 0;
  std::vector<std::string> elements;        // rendered representatives
  std::vector<std::vector<int>> table;      // table[i][j] = index of product
  std::vector<int> generator_index;         // element index of each x_i

  int eval(const words::Word& w) const;     // fold the table over the word
};

FreeObject free_object(const VarietyHandle& v, int k);

// { pi in S_k : the length-k permutation identity of pi holds in v }.
perm::Subgroup perm_group(const VarietyHandle& v, int k);

// Lattice operations on {trivial, family_x, family_y} handles.
bool family_leq(const VarietyHandle& a, const VarietyHandle& b);
VarietyHandle family_meet(const VarietyHandle& a, const VarietyHandle& b);
VarietyHandle family_join(const VarietyHandle& a, const VarietyHandle& b);

// The containment lattice of the trivial variety together with all family
// handles with indices up to `cap`, plus the unbounded-n rail (including
// the m = n = inf corner).
struct FamilyLattice {
  lattice::FiniteLattice lattice;
  std::vector<VarietyHandle> nodes;
};

FamilyLattice family_lattice(int cap);

// The equational theory of a handle restricted to words over x1..x_letters
// of length <= max_len: which of those words are zero and which pairs are
// identified. Two theories over the same window are comparable.
struct BoundedTheory {
  int max_len = 0;
  int max_letters = 0;
  std::vector<std::vector<int>> universe;  // words as letter indices, fixed order
  std::vector<int> class_of;               // canonical class ids (first-use order)
  std::vector<bool> is_zero;

  bool operator==(const BoundedTheory&) const;
};

BoundedTheory bounded_theory(const VarietyHandle& v, int max_len, int max_letters);

// Universe word as text ("x1 x2 x1").
std::string universe_word(const BoundedTheory& t, std::size_t index);

// Common refinement: identities holding in both varieties (the theory of
// their join).
BoundedTheory theory_intersection(const BoundedTheory& a, const BoundedTheory& b);

// Whether variety A is contained in variety B as far as this window can
// tell: every identification made by B is made by A.
bool theory_contains(const BoundedTheory& a, const BoundedTheory& b);

// Certification that two subgroups with the same joins and meets against a
// third produce derived varieties with the same variety joins and meets,
// while being distinct. Preconditions on the group side are checked first.
struct WitnessReport {
  int degree = 0;
  std::string v_name, g1_name, g2_name;
  bool joins_coincide = false;
  bool meets_coincide = false;
  bool zero_parts_equal = false;
  bool varieties_differ = false;
  bool splicing_ok = false;
  std::string detail;

  bool ok() const {
    return joins_coincide && meets_coincide && zero_parts_equal && varieties_differ &&
           splicing_ok;
  }
};

WitnessReport witness_harness(const perm::Subgroup& v, const perm::Subgroup& g1,
                              const perm::Subgroup& g2, int n);

// Normal form x^p ~(x)^q of a one-letter word with pseudoinversion, valid
// in every variety where ~ is the pseudoinverse (q >= 1 always).
struct UnaryNormalForm {
  long long p = 0;
  long long q = 1;
  bool operator==(const UnaryNormalForm&) const = default;
};

UnaryNormalForm normalize_one_letter(const words::Word& w);

// Renders x^p ~(x)^q back as a word, for round-trip checks.
words::Word unary_normal_form_word(const UnaryNormalForm& nf, const std::string& letter);

// An identity holds in every semilattice iff its sides have equal content;
// zero-reduced identities never do.
bool holds_in_semilattice(const words::Identity& id);

}  // namespace varlat::variety

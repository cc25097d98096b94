#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "varlat/error.hpp"
#include "varlat/perm.hpp"

namespace varlat::words {

// A nonempty word over letter identifiers, with an optional unary operation
// written ~( ... ). Concatenation is kept flat: an item is either a letter
// or a ~-wrapped subword, never a nested concatenation.
class Word {
public:
  struct Bar {
    std::shared_ptr<const Word> inner;
    bool operator==(const Bar& o) const;
  };
  using Item = std::variant<std::string, Bar>;

  explicit Word(std::vector<Item> items);

  static Word letter(std::string name);
  static Word from_letters(const std::vector<std::string>& letters);
  static Word bar(const Word& w);
  static Word concat(const Word& a, const Word& b);

  const std::vector<Item>& items() const { return items_; }
  std::size_t item_count() const { return items_.size(); }

  bool is_semigroup_word() const;             // no ~ at any depth
  std::vector<std::string> flat_letters() const;  // requires semigroup word

  bool operator==(const Word& o) const;
  bool operator!=(const Word& o) const { return !(*this == o); }

private:
  std::vector<Item> items_;
};

// Grammar: letters are identifiers [A-Za-z][A-Za-z0-9]*, separated by
// whitespace; ~( ... ) wraps a subword; a primary may carry ^k which
// repeats it k times. "x^3" parses as "x x x".
Word parse_word(std::string_view text);
std::string render_word(const Word& w);

std::set<std::string> content(const Word& w);
// Number of letter occurrences; empty when the word contains ~ (a word with
// pseudoinversion has no finite semigroup length).
std::optional<std::size_t> length(const Word& w);
std::size_t occurrences(const Word& w, std::string_view letter);
bool is_linear(const Word& w);

// Canonical order on letter names: alphabetic stem, then numeric suffix
// compared as a number, so x2 < x10.
bool letter_less(std::string_view a, std::string_view b);
std::vector<std::string> sorted_content(const Word& w);

struct Substitution {
  std::map<std::string, Word> map;
};

// Homomorphic image: letters are replaced through the substitution (letters
// without an entry are kept) and ~ commutes with the map.
Word substitute(const Word& w, const Substitution& s);

// Letter renaming along a permutation: the canonically sorted content
// c_1 < ... < c_k must have k = degree(pi), and c_i is sent to c_{i pi}.
Word rename(const Word& w, const perm::Permutation& pi);

// Witness for u <= v: v = left * xi(u) * right with xi an endomorphism of
// the free semigroup determined by `assignment` (each image nonempty) and
// possibly empty contexts.
struct PatternWitness {
  std::vector<std::string> left_context;
  std::vector<std::string> right_context;
  std::map<std::string, std::vector<std::string>> assignment;
};

// Pattern containment on plain semigroup words. Words containing ~ are
// rejected with UnsupportedOperation.
std::optional<PatternWitness> pattern_leq(const Word& u, const Word& v);

// Enumerates every factorization v = left * xi(u) * right; the callback
// returns false to stop the search.
void for_each_embedding(const Word& u, const Word& v,
                        const std::function<bool(const PatternWitness&)>& fn);

bool equivalent(const Word& u, const Word& v);
bool incomparable(const Word& u, const Word& v);
// Strictness is taken modulo mutual containment, so distinct words related
// by a letter renaming are not strictly comparable.
bool strictly_less(const Word& u, const Word& v);

// An identity u = v, or u = 0 for the zero-reduced form (shorthand for the
// pair system u x = x u = u with x a fresh letter).
class Identity {
public:
  static Identity pair(Word lhs, Word rhs);
  static Identity zero(Word w);

  bool is_zero() const { return !rhs_.has_value(); }
  const Word& lhs() const { return lhs_; }
  const Word& rhs() const;

  bool operator==(const Identity& o) const;

private:
  Identity(Word lhs, std::optional<Word> rhs);
  Word lhs_;
  std::optional<Word> rhs_;
};

// "LHS = RHS" or "W = 0" (the zero side may appear on either side).
Identity parse_identity(std::string_view text);
std::string render_identity(const Identity& id);

// The identity x_1...x_m = x_{1 pi}...x_{m pi}.
Identity permutation_identity(int m, const perm::Permutation& pi);

struct IdentityPredicates {
  std::optional<perm::Permutation> permutational;
  bool substitutive = false;
  bool balanced = false;
  bool zero_reduced = false;
};

IdentityPredicates identity_predicates(const Identity& id);

}  // namespace varlat::words

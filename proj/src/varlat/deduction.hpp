#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "varlat/words.hpp"

namespace varlat::deduce {

// The word universe for rewriting: a plain semigroup word or the absorbing
// zero element.
struct RWord {
  bool zero = false;
  std::vector<std::string> letters;  // empty iff zero

  static RWord make_zero() { return RWord{true, {}}; }
  static RWord of(const words::Word& w) { return RWord{false, w.flat_letters()}; }

  auto operator<=>(const RWord&) const = default;
};

std::string render_rword(const RWord& w);

struct Basis {
  std::vector<words::Identity> identities;
};

// Membership witness for the ideal generated by a family of zero-reduced
// words: some basis word embeds into w.
struct ZeroWitness {
  std::size_t basis_index = 0;
  words::PatternWitness embedding;
};

std::optional<ZeroWitness> zero_member(std::span<const words::Word> zero_words,
                                       const words::Word& w);

// How a zero-reduced identity w = 0 acts during rewriting. The absorbing
// convention collapses any word with an instance of w to the zero element.
// The literal convention expands w = 0 into the defining pair system
// w t = w, t w = w, w t = t w (t fresh) and rewrites with those; it exists
// to audit that the shortcut proves nothing extra.
enum class ZeroConvention { absorbing, literal };

struct RewriteStep {
  RWord result;
  std::size_t rule_index = 0;
  bool reversed = false;  // right side matched, left side produced
  std::map<std::string, std::vector<std::string>> substitution;
  std::vector<std::string> left_context, right_context;
};

std::vector<RewriteStep> one_step_rewrites(const RWord& w, const Basis& basis,
                                           std::size_t size_bound,
                                           ZeroConvention convention = ZeroConvention::absorbing);

struct TraceStep {
  RWord word;  // word after this step
  std::size_t rule_index = 0;
  bool reversed = false;
  std::map<std::string, std::vector<std::string>> substitution;
  std::vector<std::string> left_context, right_context;
};

struct DeductionTrace {
  RWord start;
  std::vector<TraceStep> steps;

  const RWord& last() const { return steps.empty() ? start : steps.back().word; }
};

struct DeriveResult {
  bool proved = false;
  std::optional<DeductionTrace> trace;
};

// Bounded bidirectional search for a rewrite path between the two sides of
// `goal` under `basis`. Unknown (proved == false) is a verdict, not an
// error: the search is a semidecision bounded by depth and word size.
// size_bound defaults to max side length + 2.
DeriveResult derive(const Basis& basis, const words::Identity& goal, int depth_bound = 8,
                    std::optional<std::size_t> size_bound = std::nullopt,
                    ZeroConvention convention = ZeroConvention::absorbing);

// Re-applies every step of a trace and checks each rewrite is justified by
// its recorded rule, substitution and context.
bool replay(const Basis& basis, const DeductionTrace& trace,
            ZeroConvention convention = ZeroConvention::absorbing);

// For a trace whose words are all linear of one common length n, the letter
// arrangement of each step is a permutation; returns their product, which
// must carry the first word to the last.
std::optional<perm::Permutation> trace_permutation(const DeductionTrace& trace);

// Permutation pi with rename(u, pi) == v for linear words over one content.
std::optional<perm::Permutation> permutation_between(const words::Word& u,
                                                     const words::Word& v);

}  // namespace varlat::deduce

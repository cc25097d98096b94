#include "varlat/deduction.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace varlat::deduce {

std::string render_rword(const RWord& w) {
  if (w.zero) return "0";
  std::string out;
  for (const auto& l : w.letters) {
    if (!out.empty()) out += ' ';
    out += l;
  }
  return out;
}

std::optional<ZeroWitness> zero_member(std::span<const words::Word> zero_words,
                                       const words::Word& w) {
  for (std::size_t i = 0; i < zero_words.size(); ++i) {
    if (auto witness = words::pattern_leq(zero_words[i], w)) {
      return ZeroWitness{i, *witness};
    }
  }
  return std::nullopt;
}

namespace {

words::Word to_word(const RWord& w) { return words::Word::from_letters(w.letters); }

std::vector<std::string> apply_assignment(
    const words::Word& pattern,
    const std::map<std::string, std::vector<std::string>>& assignment) {
  std::vector<std::string> out;
  for (const auto& l : pattern.flat_letters()) {
    const auto& img = assignment.at(l);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

std::string fresh_letter(const std::set<std::string>& taken) {
  for (int i = 0;; ++i) {
    std::string candidate = "f" + std::to_string(i);
    if (!taken.count(candidate)) return candidate;
  }
}

// Applies `lhs -> rhs` at every position of w, under every substitution.
// Letters of rhs that are not fixed by matching lhs range over the single
// letters of w plus one fresh letter.
void apply_directed(const RWord& w, const words::Word& lhs, const words::Word& rhs,
                    std::size_t rule_index, bool reversed, std::size_t size_bound,
                    std::vector<RewriteStep>& out) {
  if (w.zero) return;
  const words::Word target = to_word(w);
  std::vector<std::string> rhs_letters = rhs.flat_letters();
  std::set<std::string> lhs_content = words::content(lhs);

  words::for_each_embedding(lhs, target, [&](const words::PatternWitness& witness) {
    // Collect rhs-only letters, if any.
    std::vector<std::string> unbound;
    for (const auto& l : rhs_letters)
      if (!lhs_content.count(l) &&
          std::find(unbound.begin(), unbound.end(), l) == unbound.end())
        unbound.push_back(l);

    std::set<std::string> letter_pool(w.letters.begin(), w.letters.end());
    std::set<std::string> taken = letter_pool;
    taken.insert(lhs_content.begin(), lhs_content.end());
    taken.insert(rhs_letters.begin(), rhs_letters.end());
    std::vector<std::string> pool(letter_pool.begin(), letter_pool.end());
    pool.push_back(fresh_letter(taken));

    std::map<std::string, std::vector<std::string>> assignment = witness.assignment;
    // Enumerate choices for the unbound letters.
    std::vector<std::size_t> choice(unbound.size(), 0);
    for (;;) {
      for (std::size_t i = 0; i < unbound.size(); ++i)
        assignment[unbound[i]] = {pool[choice[i]]};
      std::vector<std::string> produced = witness.left_context;
      auto image = apply_assignment(rhs, assignment);
      produced.insert(produced.end(), image.begin(), image.end());
      produced.insert(produced.end(), witness.right_context.begin(),
                      witness.right_context.end());
      if (produced.size() <= size_bound) {
        RewriteStep step;
        step.result = RWord{false, std::move(produced)};
        step.rule_index = rule_index;
        step.reversed = reversed;
        step.substitution = assignment;
        step.left_context = witness.left_context;
        step.right_context = witness.right_context;
        out.push_back(std::move(step));
      }
      // next choice vector
      std::size_t k = 0;
      while (k < choice.size()) {
        if (++choice[k] < pool.size()) break;
        choice[k] = 0;
        ++k;
      }
      if (k == choice.size()) break;
    }
    return true;
  });
}

std::pair<words::Identity, words::Identity> literal_expansion(const words::Word& z) {
  std::set<std::string> taken = words::content(z);
  std::string t = fresh_letter(taken);
  words::Word zt = words::Word::concat(z, words::Word::letter(t));
  words::Word tz = words::Word::concat(words::Word::letter(t), z);
  return {words::Identity::pair(zt, z), words::Identity::pair(tz, z)};
}

}  // namespace

std::vector<RewriteStep> one_step_rewrites(const RWord& w, const Basis& basis,
                                           std::size_t size_bound,
                                           ZeroConvention convention) {
  std::vector<RewriteStep> out;
  if (w.zero) return out;  // the zero element absorbs; nothing rewrites out of it
  for (std::size_t ri = 0; ri < basis.identities.size(); ++ri) {
    const auto& id = basis.identities[ri];
    if (!id.is_zero()) {
      apply_directed(w, id.lhs(), id.rhs(), ri, false, size_bound, out);
      apply_directed(w, id.rhs(), id.lhs(), ri, true, size_bound, out);
      continue;
    }
    if (convention == ZeroConvention::absorbing) {
      words::Word target = to_word(w);
      if (auto witness = words::pattern_leq(id.lhs(), target)) {
        RewriteStep step;
        step.result = RWord::make_zero();
        step.rule_index = ri;
        step.substitution = witness->assignment;
        step.left_context = witness->left_context;
        step.right_context = witness->right_context;
        out.push_back(std::move(step));
      }
    } else {
      auto [zt, tz] = literal_expansion(id.lhs());
      for (const auto& expanded : {zt, tz}) {
        apply_directed(w, expanded.lhs(), expanded.rhs(), ri, false, size_bound, out);
        apply_directed(w, expanded.rhs(), expanded.lhs(), ri, true, size_bound, out);
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const RewriteStep& a, const RewriteStep& b) { return a.result < b.result; });
  return out;
}

namespace {

struct ParentInfo {
  RWord parent;
  TraceStep step;  // step.word is the child
  int depth = 0;
};

using Visited = std::map<RWord, ParentInfo>;

// Chain of steps leading from the search root down to w.
std::vector<TraceStep> path_from_root(const Visited& visited, const RWord& root, RWord w) {
  std::vector<TraceStep> steps;
  while (!(w == root)) {
    const auto& info = visited.at(w);
    steps.push_back(info.step);
    w = info.parent;
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

}  // namespace

DeriveResult derive(const Basis& basis, const words::Identity& goal, int depth_bound,
                    std::optional<std::size_t> size_bound, ZeroConvention convention) {
  if (!goal.lhs().is_semigroup_word() ||
      (!goal.is_zero() && !goal.rhs().is_semigroup_word()))
    fail(errc::unsupported, "derivation works on plain semigroup words");
  if (goal.is_zero() && convention == ZeroConvention::literal)
    fail(errc::unsupported,
         "a zero-reduced goal needs the absorbing convention; the literal mode is "
         "for auditing pair rewrites");
  for (const auto& id : basis.identities)
    if (!id.lhs().is_semigroup_word() || (!id.is_zero() && !id.rhs().is_semigroup_word()))
      fail(errc::unsupported, "derivation works on plain semigroup words");

  const RWord u = RWord::of(goal.lhs());
  const RWord v = goal.is_zero() ? RWord::make_zero() : RWord::of(goal.rhs());

  std::size_t bound = size_bound.value_or(
      std::max(u.letters.size(), v.letters.size()) + 2);

  if (u == v) {
    DeductionTrace trace;
    trace.start = u;
    return DeriveResult{true, trace};
  }

  Visited from_u, from_v;
  from_u.emplace(u, ParentInfo{u, {}, 0});
  from_v.emplace(v, ParentInfo{v, {}, 0});
  std::deque<RWord> frontier_u{u}, frontier_v{v};

  // The two searches meet in the middle; the v side replays its steps in
  // reverse orientation when the trace is stitched together.
  auto stitch = [&](const RWord& meeting) {
    DeductionTrace trace;
    trace.start = u;
    trace.steps = path_from_root(from_u, u, meeting);
    auto back = path_from_root(from_v, v, meeting);
    for (auto it = back.rbegin(); it != back.rend(); ++it) {
      // The step originally rewrote parent -> child; flipped it carries the
      // trace from the child back to the parent.
      TraceStep reversed_step = *it;
      reversed_step.word = from_v.at(it->word).parent;
      reversed_step.reversed = !it->reversed;
      trace.steps.push_back(reversed_step);
    }
    return DeriveResult{true, trace};
  };

  int spent = 0;
  bool expand_u_next = true;
  while (spent < depth_bound) {
    const bool zero_target = goal.is_zero();
    bool expand_u = zero_target ? true : expand_u_next;
    expand_u_next = !expand_u_next;
    Visited& mine = expand_u ? from_u : from_v;
    Visited& theirs = expand_u ? from_v : from_u;
    std::deque<RWord>& frontier = expand_u ? frontier_u : frontier_v;
    if (frontier.empty()) {
      if (zero_target) break;
      if (frontier_u.empty() && frontier_v.empty()) break;
      ++spent;
      continue;
    }
    std::deque<RWord> next;
    for (const RWord& w : frontier) {
      for (RewriteStep& step : one_step_rewrites(w, basis, bound, convention)) {
        if (mine.count(step.result)) continue;
        TraceStep ts;
        ts.word = step.result;
        ts.rule_index = step.rule_index;
        ts.reversed = step.reversed;
        ts.substitution = std::move(step.substitution);
        ts.left_context = std::move(step.left_context);
        ts.right_context = std::move(step.right_context);
        mine.emplace(step.result, ParentInfo{w, std::move(ts), 0});
        if (theirs.count(step.result)) return stitch(step.result);
        next.push_back(step.result);
      }
    }
    frontier = std::move(next);
    ++spent;
  }
  return DeriveResult{false, std::nullopt};
}

namespace {

bool words_equal(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  return a == b;
}

std::vector<std::string> rebuild(const TraceStep& step, const words::Word& side) {
  std::vector<std::string> out = step.left_context;
  for (const auto& l : side.flat_letters()) {
    auto it = step.substitution.find(l);
    if (it == step.substitution.end()) return {};
    out.insert(out.end(), it->second.begin(), it->second.end());
  }
  out.insert(out.end(), step.right_context.begin(), step.right_context.end());
  return out;
}

}  // namespace

bool replay(const Basis& basis, const DeductionTrace& trace, ZeroConvention convention) {
  RWord current = trace.start;
  for (const auto& step : trace.steps) {
    if (step.rule_index >= basis.identities.size()) return false;
    const auto& id = basis.identities[step.rule_index];
    if (id.is_zero()) {
      if (convention != ZeroConvention::absorbing) return false;
      auto instance = rebuild(step, id.lhs());
      if (instance.empty()) return false;
      if (!step.reversed) {
        if (current.zero || !step.word.zero) return false;
        if (!words_equal(current.letters, instance)) return false;
      } else {
        if (!current.zero || step.word.zero) return false;
        if (!words_equal(step.word.letters, instance)) return false;
      }
    } else {
      const words::Word& matched = step.reversed ? id.rhs() : id.lhs();
      const words::Word& produced = step.reversed ? id.lhs() : id.rhs();
      auto before = rebuild(step, matched);
      auto after = rebuild(step, produced);
      if (before.empty() || after.empty()) return false;
      if (current.zero || step.word.zero) return false;
      if (!words_equal(current.letters, before)) return false;
      if (!words_equal(step.word.letters, after)) return false;
    }
    current = step.word;
  }
  return true;
}

std::optional<perm::Permutation> permutation_between(const words::Word& u,
                                                     const words::Word& v) {
  if (!u.is_semigroup_word() || !v.is_semigroup_word()) return std::nullopt;
  auto predicates = words::identity_predicates(words::Identity::pair(u, v));
  return predicates.permutational;
}

std::optional<perm::Permutation> trace_permutation(const DeductionTrace& trace) {
  std::vector<RWord> sequence{trace.start};
  for (const auto& s : trace.steps) sequence.push_back(s.word);
  for (const auto& w : sequence)
    if (w.zero) return std::nullopt;
  std::optional<perm::Permutation> total;
  for (std::size_t i = 0; i + 1 < sequence.size(); ++i) {
    auto step = permutation_between(words::Word::from_letters(sequence[i].letters),
                                    words::Word::from_letters(sequence[i + 1].letters));
    if (!step) return std::nullopt;
    total = total ? perm::compose(*total, *step) : *step;
  }
  if (!total && !sequence.empty()) {
    auto c = words::content(words::Word::from_letters(sequence[0].letters));
    if (c.size() <= 6)
      total = perm::Permutation::identity(static_cast<int>(c.size()));
  }
  return total;
}

}  // namespace varlat::deduce

#include "varlat/words.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace varlat::words {

bool Word::Bar::operator==(const Bar& o) const { return *inner == *o.inner; }

Word::Word(std::vector<Item> items) : items_(std::move(items)) {
  if (items_.empty()) fail(errc::invalid_argument, "a word must be nonempty");
  for (const auto& it : items_) {
    if (const auto* name = std::get_if<std::string>(&it)) {
      if (name->empty()) fail(errc::invalid_argument, "empty letter name");
    }
  }
}

Word Word::letter(std::string name) {
  std::vector<Item> items;
  items.emplace_back(std::move(name));
  return Word(std::move(items));
}

Word Word::from_letters(const std::vector<std::string>& letters) {
  std::vector<Item> items;
  items.reserve(letters.size());
  for (const auto& l : letters) items.emplace_back(l);
  return Word(std::move(items));
}

Word Word::bar(const Word& w) {
  std::vector<Item> items;
  items.emplace_back(Bar{std::make_shared<const Word>(w)});
  return Word(std::move(items));
}

Word Word::concat(const Word& a, const Word& b) {
  std::vector<Item> items = a.items_;
  items.insert(items.end(), b.items_.begin(), b.items_.end());
  return Word(std::move(items));
}

bool Word::is_semigroup_word() const {
  for (const auto& it : items_)
    if (std::holds_alternative<Bar>(it)) return false;
  return true;
}

std::vector<std::string> Word::flat_letters() const {
  std::vector<std::string> out;
  out.reserve(items_.size());
  for (const auto& it : items_) {
    const auto* name = std::get_if<std::string>(&it);
    if (!name) fail(errc::unsupported, "word contains ~ and has no flat letter form");
    out.push_back(*name);
  }
  return out;
}

bool Word::operator==(const Word& o) const { return items_ == o.items_; }

namespace {

struct Lexer {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  std::string ident() {
    skip_ws();
    if (pos >= text.size() || !std::isalpha(static_cast<unsigned char>(text[pos])))
      fail(errc::parse, "expected a letter identifier at position " + std::to_string(pos));
    std::size_t start = pos;
    ++pos;
    while (pos < text.size() && std::isalnum(static_cast<unsigned char>(text[pos]))) ++pos;
    return std::string(text.substr(start, pos - start));
  }

  std::size_t number() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail(errc::parse, "expected a number at position " + std::to_string(pos));
    std::size_t value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
      if (value > 1'000'000) fail(errc::parse, "exponent too large");
      ++pos;
    }
    return value;
  }

  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      fail(errc::parse, std::string("expected '") + c + "' at position " + std::to_string(pos));
    ++pos;
  }
};

std::vector<Word::Item> parse_items(Lexer& lx, bool stop_at_rparen);

// primary := letter | '~' '(' word ')', optionally followed by ^k
void parse_primary(Lexer& lx, std::vector<Word::Item>& out) {
  std::vector<Word::Item> unit;
  if (lx.peek() == '~') {
    ++lx.pos;
    lx.expect('(');
    auto inner = parse_items(lx, true);
    lx.expect(')');
    unit.emplace_back(Word::Bar{std::make_shared<const Word>(Word(std::move(inner)))});
  } else {
    unit.emplace_back(lx.ident());
  }
  std::size_t reps = 1;
  if (lx.peek() == '^') {
    ++lx.pos;
    reps = lx.number();
    if (reps == 0) fail(errc::parse, "exponent must be at least 1");
  }
  for (std::size_t i = 0; i < reps; ++i)
    out.insert(out.end(), unit.begin(), unit.end());
}

std::vector<Word::Item> parse_items(Lexer& lx, bool stop_at_rparen) {
  std::vector<Word::Item> out;
  while (!lx.at_end()) {
    if (stop_at_rparen && lx.peek() == ')') break;
    parse_primary(lx, out);
  }
  if (out.empty()) fail(errc::parse, "empty word");
  return out;
}

}  // namespace

Word parse_word(std::string_view text) {
  Lexer lx{text};
  auto items = parse_items(lx, false);
  if (!lx.at_end()) fail(errc::parse, "trailing input after word");
  return Word(std::move(items));
}

std::string render_word(const Word& w) {
  std::string out;
  for (const auto& it : w.items()) {
    if (!out.empty()) out += ' ';
    if (const auto* name = std::get_if<std::string>(&it)) {
      out += *name;
    } else {
      out += "~(";
      out += render_word(*std::get<Word::Bar>(it).inner);
      out += ")";
    }
  }
  return out;
}

std::set<std::string> content(const Word& w) {
  std::set<std::string> out;
  for (const auto& it : w.items()) {
    if (const auto* name = std::get_if<std::string>(&it)) {
      out.insert(*name);
    } else {
      auto sub = content(*std::get<Word::Bar>(it).inner);
      out.insert(sub.begin(), sub.end());
    }
  }
  return out;
}

std::optional<std::size_t> length(const Word& w) {
  if (!w.is_semigroup_word()) return std::nullopt;
  return w.item_count();
}

std::size_t occurrences(const Word& w, std::string_view letter) {
  std::size_t count = 0;
  for (const auto& it : w.items()) {
    if (const auto* name = std::get_if<std::string>(&it)) {
      if (*name == letter) ++count;
    } else {
      count += occurrences(*std::get<Word::Bar>(it).inner, letter);
    }
  }
  return count;
}

bool is_linear(const Word& w) {
  for (const auto& l : content(w))
    if (occurrences(w, l) != 1) return false;
  return true;
}

bool letter_less(std::string_view a, std::string_view b) {
  auto split = [](std::string_view s) {
    std::size_t cut = s.size();
    while (cut > 0 && std::isdigit(static_cast<unsigned char>(s[cut - 1]))) --cut;
    std::string_view stem = s.substr(0, cut);
    long long num = -1;  // names without a numeric suffix sort first
    if (cut < s.size() && s.size() - cut <= 18) {
      num = 0;
      for (std::size_t i = cut; i < s.size(); ++i) num = num * 10 + (s[i] - '0');
    }
    return std::pair<std::string_view, long long>(stem, num);
  };
  auto [sa, na] = split(a);
  auto [sb, nb] = split(b);
  if (sa != sb) return sa < sb;
  if (na != nb) return na < nb;
  return a < b;
}

std::vector<std::string> sorted_content(const Word& w) {
  auto c = content(w);
  std::vector<std::string> out(c.begin(), c.end());
  std::sort(out.begin(), out.end(),
            [](const std::string& a, const std::string& b) { return letter_less(a, b); });
  return out;
}

Word substitute(const Word& w, const Substitution& s) {
  std::vector<Word::Item> items;
  for (const auto& it : w.items()) {
    if (const auto* name = std::get_if<std::string>(&it)) {
      auto found = s.map.find(*name);
      if (found == s.map.end()) {
        items.emplace_back(*name);
      } else {
        const auto& img = found->second.items();
        items.insert(items.end(), img.begin(), img.end());
      }
    } else {
      Word img = substitute(*std::get<Word::Bar>(it).inner, s);
      items.emplace_back(Word::Bar{std::make_shared<const Word>(std::move(img))});
    }
  }
  return Word(std::move(items));
}

Word rename(const Word& w, const perm::Permutation& pi) {
  auto letters = sorted_content(w);
  if (static_cast<int>(letters.size()) != pi.degree())
    fail(errc::invalid_argument,
         "rename needs a permutation of degree equal to the content size");
  Substitution s;
  for (int i = 1; i <= pi.degree(); ++i)
    s.map.emplace(letters[static_cast<std::size_t>(i - 1)],
                  Word::letter(letters[static_cast<std::size_t>(pi.apply(i) - 1)]));
  return substitute(w, s);
}

namespace {

// Unifies pattern letters against target[lo..hi), assigning each pattern
// letter a nonempty factor, left to right with backtracking.
bool match_core(const std::vector<std::string>& pattern, std::size_t pi,
                const std::vector<std::string>& target, std::size_t lo, std::size_t hi,
                std::map<std::string, std::vector<std::string>>& assignment,
                const std::function<bool(const std::map<std::string, std::vector<std::string>>&)>& fn) {
  if (pi == pattern.size()) {
    if (lo != hi) return true;  // leftover target, keep searching
    return fn(assignment);     // false = stop the whole search
  }
  if (lo >= hi) return true;
  const std::string& letter = pattern[pi];
  auto bound = assignment.find(letter);
  if (bound != assignment.end()) {
    const auto& img = bound->second;
    if (img.size() > hi - lo) return true;
    for (std::size_t k = 0; k < img.size(); ++k)
      if (target[lo + k] != img[k]) return true;
    return match_core(pattern, pi + 1, target, lo + img.size(), hi, assignment, fn);
  }
  std::size_t remaining_letters = pattern.size() - pi - 1;
  for (std::size_t len = 1; len + remaining_letters <= hi - lo; ++len) {
    std::vector<std::string> img(target.begin() + static_cast<long>(lo),
                                 target.begin() + static_cast<long>(lo + len));
    assignment.emplace(letter, std::move(img));
    bool keep_going = match_core(pattern, pi + 1, target, lo + len, hi, assignment, fn);
    assignment.erase(letter);
    if (!keep_going) return false;
  }
  return true;
}

}  // namespace

void for_each_embedding(const Word& u, const Word& v,
                        const std::function<bool(const PatternWitness&)>& fn) {
  if (!u.is_semigroup_word() || !v.is_semigroup_word())
    fail(errc::unsupported, "pattern containment is defined for plain semigroup words only");
  const auto pattern = u.flat_letters();
  const auto target = v.flat_letters();
  if (pattern.size() > target.size()) return;
  for (std::size_t lo = 0; lo < target.size(); ++lo) {
    for (std::size_t hi = lo + 1; hi <= target.size(); ++hi) {
      std::map<std::string, std::vector<std::string>> assignment;
      bool keep_going = match_core(
          pattern, 0, target, lo, hi, assignment,
          [&](const std::map<std::string, std::vector<std::string>>& a) {
            PatternWitness w;
            w.left_context.assign(target.begin(), target.begin() + static_cast<long>(lo));
            w.right_context.assign(target.begin() + static_cast<long>(hi), target.end());
            w.assignment = a;
            return fn(w);
          });
      if (!keep_going) return;
    }
  }
}

std::optional<PatternWitness> pattern_leq(const Word& u, const Word& v) {
  std::optional<PatternWitness> result;
  for_each_embedding(u, v, [&](const PatternWitness& w) {
    result = w;
    return false;
  });
  return result;
}

namespace {

bool renaming_exists(const Word& u, const Word& v,
                     std::map<std::string, std::string>& fwd,
                     std::map<std::string, std::string>& bwd) {
  if (u.item_count() != v.item_count()) return false;
  for (std::size_t i = 0; i < u.item_count(); ++i) {
    const auto& iu = u.items()[i];
    const auto& iv = v.items()[i];
    const auto* lu = std::get_if<std::string>(&iu);
    const auto* lv = std::get_if<std::string>(&iv);
    if ((lu == nullptr) != (lv == nullptr)) return false;
    if (lu) {
      auto f = fwd.find(*lu);
      if (f != fwd.end()) {
        if (f->second != *lv) return false;
      } else {
        auto b = bwd.find(*lv);
        if (b != bwd.end()) return false;
        fwd.emplace(*lu, *lv);
        bwd.emplace(*lv, *lu);
      }
    } else {
      const auto& bu = std::get<Word::Bar>(iu);
      const auto& bv = std::get<Word::Bar>(iv);
      if (!renaming_exists(*bu.inner, *bv.inner, fwd, bwd)) return false;
    }
  }
  return true;
}

}  // namespace

bool equivalent(const Word& u, const Word& v) {
  std::map<std::string, std::string> fwd, bwd;
  return renaming_exists(u, v, fwd, bwd);
}

bool incomparable(const Word& u, const Word& v) {
  return !pattern_leq(u, v).has_value() && !pattern_leq(v, u).has_value();
}

bool strictly_less(const Word& u, const Word& v) {
  return pattern_leq(u, v).has_value() && !pattern_leq(v, u).has_value();
}

Identity::Identity(Word lhs, std::optional<Word> rhs)
    : lhs_(std::move(lhs)), rhs_(std::move(rhs)) {}

Identity Identity::pair(Word lhs, Word rhs) {
  return Identity(std::move(lhs), std::move(rhs));
}

Identity Identity::zero(Word w) { return Identity(std::move(w), std::nullopt); }

const Word& Identity::rhs() const {
  if (!rhs_) fail(errc::invalid_argument, "a zero-reduced identity has no right side");
  return *rhs_;
}

bool Identity::operator==(const Identity& o) const {
  return lhs_ == o.lhs_ && rhs_ == o.rhs_;
}

Identity parse_identity(std::string_view text) {
  auto eq = text.find('=');
  if (eq == std::string_view::npos) fail(errc::parse, "an identity needs '='");
  if (text.find('=', eq + 1) != std::string_view::npos)
    fail(errc::parse, "an identity has exactly one '='");
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  std::string_view left = trim(text.substr(0, eq));
  std::string_view right = trim(text.substr(eq + 1));
  bool left_zero = (left == "0");
  bool right_zero = (right == "0");
  if (left_zero && right_zero) fail(errc::parse, "0 = 0 is not an identity");
  if (left_zero) return Identity::zero(parse_word(right));
  if (right_zero) return Identity::zero(parse_word(left));
  return Identity::pair(parse_word(left), parse_word(right));
}

std::string render_identity(const Identity& id) {
  if (id.is_zero()) return render_word(id.lhs()) + " = 0";
  return render_word(id.lhs()) + " = " + render_word(id.rhs());
}

Identity permutation_identity(int m, const perm::Permutation& pi) {
  if (pi.degree() != m)
    fail(errc::invalid_argument, "permutation degree must match the word length");
  std::vector<std::string> lhs, rhs;
  for (int i = 1; i <= m; ++i) {
    lhs.push_back("x" + std::to_string(i));
    rhs.push_back("x" + std::to_string(pi.apply(i)));
  }
  return Identity::pair(Word::from_letters(lhs), Word::from_letters(rhs));
}

IdentityPredicates identity_predicates(const Identity& id) {
  IdentityPredicates out;
  out.zero_reduced = id.is_zero();
  if (id.is_zero()) return out;

  const Word& u = id.lhs();
  const Word& v = id.rhs();
  if (!u.is_semigroup_word() || !v.is_semigroup_word()) return out;

  auto cu = content(u);
  auto cv = content(v);

  if (is_linear(u) && is_linear(v) && cu == cv && u.item_count() == v.item_count()) {
    // Solve rename(u, pi) == v on sorted content.
    auto letters = sorted_content(u);
    auto index_of = [&](const std::string& name) {
      return static_cast<int>(std::find(letters.begin(), letters.end(), name) -
                              letters.begin()) +
             1;
    };
    const int m = static_cast<int>(letters.size());
    std::vector<int> img(static_cast<std::size_t>(m), 0);
    auto ul = u.flat_letters();
    auto vl = v.flat_letters();
    for (std::size_t i = 0; i < ul.size(); ++i)
      img[static_cast<std::size_t>(index_of(ul[i]) - 1)] = index_of(vl[i]);
    if (m <= 5) out.permutational = perm::Permutation(img);
  }

  out.substitutive = (cu == cv) && equivalent(u, v);

  out.balanced = true;
  for (const auto& l : cu)
    if (occurrences(u, l) != occurrences(v, l)) out.balanced = false;
  for (const auto& l : cv)
    if (occurrences(u, l) != occurrences(v, l)) out.balanced = false;

  return out;
}

}  // namespace varlat::words

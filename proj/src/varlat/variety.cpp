#include "varlat/variety.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <set>
#include <utility>

#include "varlat/error.hpp"

namespace varlat::variety {

namespace {

using words::Identity;
using words::Word;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      break;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

std::string join_space(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i != 0) out += ' ';
    out += parts[i];
  }
  return out;
}

int parse_plain_int(std::string_view s) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    fail(errc::parse, "expected a number, got '" + std::string(s) + "'");
  return value;
}

int parse_family_index(std::string_view s) {
  if (s == "inf") return kInf;
  return parse_plain_int(s);
}

std::vector<std::string> make_letters(int k) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

void check_family_indices(int m, int n) {
  if (m < 2 || n < 2) fail(errc::invalid_argument, "family indices start at 2");
  const bool m_above_n = n != kInf && (m == kInf || m > n);
  if (m_above_n) fail(errc::invalid_argument, "family indices need m <= n");
}

// Small deterministic generating set, greedily picked in canonical member
// order.
std::vector<perm::Permutation> generating_set(const perm::Subgroup& g) {
  std::vector<perm::Permutation> gens;
  if (g.order() == 1) return gens;
  perm::Subgroup closed = perm::Subgroup::trivial(g.degree());
  for (const auto& p : g.members()) {
    if (p.is_identity() || closed.contains(p)) continue;
    gens.push_back(p);
    closed = perm::Subgroup::closure(g.degree(), gens);
    if (closed.order() == g.order()) break;
  }
  return gens;
}

// Length-n letter patterns with a repeated letter, one per isomorphism
// type: first occurrences are numbered 1, 2, ... in reading order.
void repeated_patterns_rec(int n, int pos, int used, std::vector<int>& shape,
                           std::vector<std::vector<std::string>>& out) {
  if (pos == n) {
    if (used < n) {
      std::vector<std::string> letters(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i)
        letters[static_cast<std::size_t>(i)] = "x" + std::to_string(shape[static_cast<std::size_t>(i)]);
      out.push_back(std::move(letters));
    }
    return;
  }
  for (int v = 1; v <= used + 1; ++v) {
    shape[static_cast<std::size_t>(pos)] = v;
    repeated_patterns_rec(n, pos + 1, std::max(used, v), shape, out);
  }
}

std::vector<std::vector<std::string>> repeated_letter_patterns(int n) {
  std::vector<std::vector<std::string>> out;
  std::vector<int> shape(static_cast<std::size_t>(n));
  repeated_patterns_rec(n, 0, 0, shape, out);
  return out;
}

bool letters_less(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const std::string& x, const std::string& y) {
                                        return words::letter_less(x, y);
                                      });
}

}  // namespace

std::string index_to_string(int v) {
  return v == kInf ? "inf" : std::to_string(v);
}

VarietyHandle VarietyHandle::trivial() {
  VarietyHandle h;
  h.kind_ = Kind::trivial;
  return h;
}

VarietyHandle VarietyHandle::family_x(int m, int n) {
  check_family_indices(m, n);
  VarietyHandle h;
  h.kind_ = Kind::family_x;
  h.m_ = m;
  h.n_ = n;
  return h;
}

VarietyHandle VarietyHandle::family_y(int m, int n) {
  check_family_indices(m, n);
  VarietyHandle h;
  h.kind_ = (m == 2 && n == 2) ? Kind::family_x : Kind::family_y;
  h.m_ = m;
  h.n_ = n;
  return h;
}

VarietyHandle VarietyHandle::subgroup_derived(perm::Subgroup g, int n) {
  if (g.degree() != n)
    fail(errc::invalid_argument, "the subgroup degree must equal the length bound n");
  VarietyHandle h;
  h.kind_ = Kind::subgroup_derived;
  h.n_ = n;
  h.group_ = std::move(g);
  return h;
}

VarietyHandle VarietyHandle::raw_basis(deduce::Basis basis) {
  VarietyHandle h;
  h.kind_ = Kind::raw_basis;
  h.basis_ = std::make_shared<const deduce::Basis>(std::move(basis));
  return h;
}

const perm::Subgroup& VarietyHandle::group() const {
  if (!group_) fail(errc::invalid_argument, "handle carries no subgroup");
  return *group_;
}

const deduce::Basis& VarietyHandle::basis() const {
  if (!basis_) fail(errc::invalid_argument, "handle carries no identity basis");
  return *basis_;
}

bool VarietyHandle::square_is_zero() const {
  if (kind_ == Kind::family_y) return true;
  return kind_ == Kind::family_x && n_ == 2;
}

std::string VarietyHandle::to_string() const {
  switch (kind_) {
    case Kind::trivial:
      return "T";
    case Kind::family_x:
    case Kind::family_y: {
      std::string out = kind_ == Kind::family_x ? "X:" : "Y:";
      out += index_to_string(m_);
      out += ',';
      out += index_to_string(n_);
      return out;
    }
    case Kind::subgroup_derived: {
      std::string out = "D:" + std::to_string(n_) + ":";
      const auto gens = generating_set(*group_);
      if (gens.empty()) return out + "e";
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i != 0) out += ';';
        out += gens[i].to_cycles();
      }
      return out;
    }
    case Kind::raw_basis: {
      std::string out = "B:";
      for (std::size_t i = 0; i < basis_->identities.size(); ++i) {
        if (i != 0) out += ';';
        out += words::render_identity(basis_->identities[i]);
      }
      return out;
    }
  }
  fail(errc::invalid_argument, "corrupt variety handle");
}

bool VarietyHandle::operator==(const VarietyHandle& o) const {
  if (kind_ != o.kind_) return false;
  switch (kind_) {
    case Kind::trivial:
      return true;
    case Kind::family_x:
    case Kind::family_y:
      return m_ == o.m_ && n_ == o.n_;
    case Kind::subgroup_derived:
      return n_ == o.n_ && *group_ == *o.group_;
    case Kind::raw_basis:
      return basis_->identities == o.basis_->identities;
  }
  return false;
}

VarietyHandle parse_handle(std::string_view text) {
  const std::string_view s = trim(text);
  if (s == "T") return VarietyHandle::trivial();
  const auto colon = s.find(':');
  if (colon == std::string_view::npos)
    fail(errc::parse, "unrecognized variety handle '" + std::string(text) + "'");
  const std::string_view head = s.substr(0, colon);
  const std::string_view rest = s.substr(colon + 1);
  if (head == "X" || head == "Y") {
    const auto comma = rest.find(',');
    if (comma == std::string_view::npos)
      fail(errc::parse, "expected '" + std::string(head) + ":m,n'");
    const int m = parse_family_index(trim(rest.substr(0, comma)));
    const int n = parse_family_index(trim(rest.substr(comma + 1)));
    return head == "X" ? VarietyHandle::family_x(m, n) : VarietyHandle::family_y(m, n);
  }
  if (head == "D") {
    const auto colon2 = rest.find(':');
    if (colon2 == std::string_view::npos) fail(errc::parse, "expected 'D:n:generators'");
    const int n = parse_plain_int(trim(rest.substr(0, colon2)));
    std::vector<perm::Permutation> gens;
    for (const auto part : split(rest.substr(colon2 + 1), ';')) {
      const auto tok = trim(part);
      if (tok.empty()) fail(errc::parse, "empty generator in subgroup handle");
      gens.push_back(perm::Permutation::from_cycles(n, tok));
    }
    return VarietyHandle::subgroup_derived(perm::Subgroup::closure(n, gens), n);
  }
  if (head == "B") {
    deduce::Basis basis;
    for (const auto part : split(rest, ';')) basis.identities.push_back(words::parse_identity(part));
    return VarietyHandle::raw_basis(std::move(basis));
  }
  fail(errc::parse, "unrecognized variety handle '" + std::string(text) + "'");
}

NormalForm normal_form(const VarietyHandle& v, const Word& w) {
  switch (v.kind()) {
    case VarietyHandle::Kind::trivial:
      return NormalForm{true, {}};
    case VarietyHandle::Kind::raw_basis:
      fail(errc::unsupported, "raw bases have no normal form procedure");
    default:
      break;
  }
  // Every supported handle describes nil semigroups, where the pseudoinverse
  // of each element is zero; any ~ therefore collapses the word.
  if (!w.is_semigroup_word()) return NormalForm{true, {}};
  std::vector<std::string> letters = w.flat_letters();
  const int len = static_cast<int>(letters.size());
  const std::set<std::string> distinct(letters.begin(), letters.end());
  const bool linear = distinct.size() == letters.size();

  if (v.is_family()) {
    if (v.n() != kInf && len >= v.n()) return NormalForm{true, {}};
    if (!linear) {
      const bool square = len == 2 && letters[0] == letters[1];
      if (square && !v.square_is_zero()) return NormalForm{false, std::move(letters)};
      return NormalForm{true, {}};
    }
    if (v.m() != kInf && len >= v.m())
      std::sort(letters.begin(), letters.end(),
                [](const std::string& a, const std::string& b) { return words::letter_less(a, b); });
    return NormalForm{false, std::move(letters)};
  }

  const int n = v.n();
  if (len > n) return NormalForm{true, {}};
  if (len == n) {
    if (!linear) return NormalForm{true, {}};
    // Minimum over the arrangement orbit: pi sends the word w to the word
    // whose i-th position holds w[i pi].
    std::vector<std::string> best = letters;
    std::vector<std::string> cand(letters.size());
    for (const auto& pi : v.group().members()) {
      for (int i = 1; i <= n; ++i)
        cand[static_cast<std::size_t>(i - 1)] = letters[static_cast<std::size_t>(pi.apply(i) - 1)];
      if (letters_less(cand, best)) best = cand;
    }
    return NormalForm{false, std::move(best)};
  }
  return NormalForm{false, std::move(letters)};
}

bool holds(const VarietyHandle& v, const Identity& id) {
  if (v.kind() == VarietyHandle::Kind::trivial) return true;
  if (v.kind() == VarietyHandle::Kind::raw_basis) {
    if (deduce::derive(v.basis(), id).proved) return true;
    fail(errc::undecided,
         "bounded derivation search exhausted for " + words::render_identity(id));
  }
  if (id.is_zero()) return normal_form(v, id.lhs()).zero;
  return normal_form(v, id.lhs()) == normal_form(v, id.rhs());
}

deduce::Basis defining_basis(const VarietyHandle& v) {
  deduce::Basis b;
  switch (v.kind()) {
    case VarietyHandle::Kind::trivial:
      b.identities.push_back(Identity::pair(Word::letter("x"), Word::letter("y")));
      return b;
    case VarietyHandle::Kind::raw_basis:
      return v.basis();
    default:
      break;
  }
  if (v.is_family()) {
    b.identities.push_back(Identity::zero(words::parse_word("x x y")));
    b.identities.push_back(Identity::zero(words::parse_word("x y x")));
    b.identities.push_back(Identity::zero(words::parse_word("y x x")));
    if (v.square_is_zero()) b.identities.push_back(Identity::zero(words::parse_word("x x")));
    if (v.n() != kInf) b.identities.push_back(Identity::zero(Word::from_letters(make_letters(v.n()))));
    if (v.m() != kInf) {
      if (v.m() > 5)
        fail(errc::too_large, "permutation identities are materialized only for m <= 5");
      const auto sym = perm::Subgroup::symmetric(v.m());
      for (const auto& pi : sym.members())
        if (!pi.is_identity()) b.identities.push_back(words::permutation_identity(v.m(), pi));
    }
    return b;
  }
  const int n = v.n();
  b.identities.push_back(Identity::zero(Word::from_letters(make_letters(n + 1))));
  for (const auto& pattern : repeated_letter_patterns(n))
    b.identities.push_back(Identity::zero(Word::from_letters(pattern)));
  for (const auto& pi : v.group().members())
    if (!pi.is_identity()) b.identities.push_back(words::permutation_identity(n, pi));
  return b;
}

int FreeObject::eval(const words::Word& w) const {
  if (!w.is_semigroup_word()) return 0;
  int cur = -1;
  for (const auto& name : w.flat_letters()) {
    int ordinal = 0;
    if (name.size() >= 2 && name[0] == 'x') {
      const auto digits = std::string_view(name).substr(1);
      const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), ordinal);
      if (ec != std::errc() || ptr != digits.data() + digits.size()) ordinal = 0;
    }
    if (ordinal < 1 || ordinal > generators)
      fail(errc::invalid_argument,
           "free object words range over x1..x" + std::to_string(generators));
    const int gen = generator_index[static_cast<std::size_t>(ordinal - 1)];
    cur = cur < 0 ? gen : table[static_cast<std::size_t>(cur)][static_cast<std::size_t>(gen)];
  }
  return cur;
}

FreeObject free_object(const VarietyHandle& v, int k) {
  if (k < 1) fail(errc::invalid_argument, "free objects need at least one generator");
  if (k > 4) fail(errc::too_large, "free objects are materialized for at most 4 generators");
  FreeObject f;
  f.generators = k;
  if (v.kind() == VarietyHandle::Kind::trivial) {
    f.elements = {"0"};
    f.table = {{0}};
    f.generator_index.assign(static_cast<std::size_t>(k), 0);
    return f;
  }
  if (v.kind() == VarietyHandle::Kind::raw_basis)
    fail(errc::unsupported, "free objects need a normal form procedure");

  const auto gens = make_letters(k);
  std::set<std::vector<std::string>> seen;
  std::vector<std::vector<std::string>> queue;
  for (const auto& g : gens) {
    const auto nf = normal_form(v, Word::letter(g));
    if (!nf.zero && seen.insert(nf.letters).second) queue.push_back(nf.letters);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto rep = queue[head];
    for (const auto& g : gens) {
      auto prod = rep;
      prod.push_back(g);
      const auto nf = normal_form(v, Word::from_letters(prod));
      if (!nf.zero && seen.insert(nf.letters).second) queue.push_back(nf.letters);
    }
  }

  std::vector<std::vector<std::string>> reps(seen.begin(), seen.end());
  std::sort(reps.begin(), reps.end(), letters_less);
  f.elements.push_back("0");
  std::map<std::vector<std::string>, int> index;
  for (auto& r : reps) {
    index.emplace(r, static_cast<int>(f.elements.size()));
    f.elements.push_back(join_space(r));
  }
  const std::size_t total = f.elements.size();
  f.table.assign(total, std::vector<int>(total, 0));
  for (std::size_t i = 1; i < total; ++i) {
    for (std::size_t j = 1; j < total; ++j) {
      auto prod = reps[i - 1];
      prod.insert(prod.end(), reps[j - 1].begin(), reps[j - 1].end());
      const auto nf = normal_form(v, Word::from_letters(prod));
      f.table[i][j] = nf.zero ? 0 : index.at(nf.letters);
    }
  }
  for (const auto& g : gens) {
    const auto nf = normal_form(v, Word::letter(g));
    f.generator_index.push_back(nf.zero ? 0 : index.at(nf.letters));
  }
  return f;
}

perm::Subgroup perm_group(const VarietyHandle& v, int k) {
  if (k < 1) fail(errc::invalid_argument, "the window length must be positive");
  if (v.kind() == VarietyHandle::Kind::raw_basis)
    fail(errc::unsupported, "membership is only semidecidable for raw bases");
  const auto sym = perm::Subgroup::symmetric(k);
  std::vector<perm::Permutation> members;
  for (const auto& pi : sym.members())
    if (holds(v, words::permutation_identity(k, pi))) members.push_back(pi);
  return perm::Subgroup(k, std::move(members));
}

namespace {

struct FamilyKey {
  bool bottom = false;
  int m = 0, n = 0;
  bool square_zero = false;
};

FamilyKey key_of(const VarietyHandle& h) {
  if (h.kind() == VarietyHandle::Kind::trivial) return FamilyKey{true, 0, 0, true};
  if (!h.is_family())
    fail(errc::unsupported, "lattice operations cover the trivial and family handles");
  return FamilyKey{false, h.m(), h.n(), h.square_is_zero()};
}

}  // namespace

bool family_leq(const VarietyHandle& a, const VarietyHandle& b) {
  const auto ka = key_of(a), kb = key_of(b);
  if (ka.bottom) return true;
  if (kb.bottom) return false;
  return ka.m <= kb.m && ka.n <= kb.n && (!kb.square_zero || ka.square_zero);
}

VarietyHandle family_meet(const VarietyHandle& a, const VarietyHandle& b) {
  const auto ka = key_of(a), kb = key_of(b);
  if (ka.bottom || kb.bottom) return VarietyHandle::trivial();
  const int m = std::min(ka.m, kb.m), n = std::min(ka.n, kb.n);
  return ka.square_zero || kb.square_zero ? VarietyHandle::family_y(m, n)
                                          : VarietyHandle::family_x(m, n);
}

VarietyHandle family_join(const VarietyHandle& a, const VarietyHandle& b) {
  const auto ka = key_of(a), kb = key_of(b);
  if (ka.bottom) return b;
  if (kb.bottom) return a;
  const int m = std::max(ka.m, kb.m), n = std::max(ka.n, kb.n);
  return ka.square_zero && kb.square_zero ? VarietyHandle::family_y(m, n)
                                          : VarietyHandle::family_x(m, n);
}

FamilyLattice family_lattice(int cap) {
  if (cap < 2) fail(errc::invalid_argument, "the index cap must be at least 2");
  if (cap > 8) fail(errc::too_large, "the family lattice is materialized for caps up to 8");
  std::vector<int> indices;
  for (int m = 2; m <= cap; ++m) indices.push_back(m);
  indices.push_back(kInf);
  const auto below = [](int a, int b) {  // a < b with inf on top
    if (a == b || a == kInf) return false;
    return b == kInf || a < b;
  };

  std::vector<VarietyHandle> nodes;
  nodes.push_back(VarietyHandle::trivial());
  for (const bool square_zero : {false, true})
    for (const int m : indices)
      for (const int n : indices) {
        if (below(n, m)) continue;
        if (square_zero && m == 2 && n == 2) continue;  // canonical duplicate of X:2,2
        nodes.push_back(square_zero ? VarietyHandle::family_y(m, n)
                                    : VarietyHandle::family_x(m, n));
      }

  const std::size_t total = nodes.size();
  std::vector<std::string> labels;
  labels.reserve(total);
  for (const auto& h : nodes) {
    if (h.kind() == VarietyHandle::Kind::trivial) {
      labels.push_back("T");
    } else if (h.m() == 2 && h.n() == 2) {
      labels.push_back("X_{2,2}=Y_{2,2}");
    } else {
      std::string l = h.kind() == VarietyHandle::Kind::family_y ? "Y_{" : "X_{";
      l += index_to_string(h.m());
      l += ',';
      l += index_to_string(h.n());
      l += '}';
      labels.push_back(std::move(l));
    }
  }
  std::vector<std::uint8_t> leq(total * total, 0);
  for (std::size_t i = 0; i < total; ++i)
    for (std::size_t j = 0; j < total; ++j)
      leq[i * total + j] = family_leq(nodes[i], nodes[j]) ? 1 : 0;
  return FamilyLattice{lattice::FiniteLattice::from_leq(total, std::move(leq), std::move(labels)),
                       std::move(nodes)};
}

bool BoundedTheory::operator==(const BoundedTheory& o) const {
  return max_len == o.max_len && max_letters == o.max_letters && class_of == o.class_of &&
         is_zero == o.is_zero;
}

BoundedTheory bounded_theory(const VarietyHandle& v, int max_len, int max_letters) {
  if (max_len < 1 || max_letters < 1)
    fail(errc::invalid_argument, "the theory window must have positive bounds");
  if (v.kind() == VarietyHandle::Kind::raw_basis)
    fail(errc::unsupported, "bounded theories need a normal form procedure");
  long long total = 0, layer = 1;
  for (int l = 1; l <= max_len; ++l) {
    layer *= max_letters;
    total += layer;
    if (total > 200000)
      fail(errc::too_large, "the theory window exceeds 200000 words");
  }

  BoundedTheory t;
  t.max_len = max_len;
  t.max_letters = max_letters;
  t.universe.reserve(static_cast<std::size_t>(total));
  for (int len = 1; len <= max_len; ++len) {
    std::vector<int> idx(static_cast<std::size_t>(len), 0);
    while (true) {
      t.universe.push_back(idx);
      int pos = len - 1;
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == max_letters - 1)
        idx[static_cast<std::size_t>(pos--)] = 0;
      if (pos < 0) break;
      ++idx[static_cast<std::size_t>(pos)];
    }
  }

  std::map<std::string, int> ids;
  for (const auto& wi : t.universe) {
    std::vector<std::string> letters(wi.size());
    for (std::size_t i = 0; i < wi.size(); ++i) letters[i] = "x" + std::to_string(wi[i] + 1);
    const auto nf = normal_form(v, Word::from_letters(letters));
    t.is_zero.push_back(nf.zero);
    const std::string key = nf.zero ? std::string("0") : join_space(nf.letters);
    const auto [it, fresh] = ids.emplace(key, static_cast<int>(ids.size()));
    t.class_of.push_back(it->second);
  }
  return t;
}

std::string universe_word(const BoundedTheory& t, std::size_t index) {
  const auto& wi = t.universe.at(index);
  std::vector<std::string> letters(wi.size());
  for (std::size_t i = 0; i < wi.size(); ++i) letters[i] = "x" + std::to_string(wi[i] + 1);
  return join_space(letters);
}

namespace {

void check_same_window(const BoundedTheory& a, const BoundedTheory& b) {
  if (a.max_len != b.max_len || a.max_letters != b.max_letters)
    fail(errc::invalid_argument, "comparable theories need the same window");
}

}  // namespace

BoundedTheory theory_intersection(const BoundedTheory& a, const BoundedTheory& b) {
  check_same_window(a, b);
  BoundedTheory t;
  t.max_len = a.max_len;
  t.max_letters = a.max_letters;
  t.universe = a.universe;
  std::map<std::pair<int, int>, int> ids;
  for (std::size_t i = 0; i < a.class_of.size(); ++i) {
    const auto [it, fresh] =
        ids.emplace(std::make_pair(a.class_of[i], b.class_of[i]), static_cast<int>(ids.size()));
    t.class_of.push_back(it->second);
    t.is_zero.push_back(a.is_zero[i] && b.is_zero[i]);
  }
  return t;
}

bool theory_contains(const BoundedTheory& a, const BoundedTheory& b) {
  check_same_window(a, b);
  std::map<int, int> to_a;
  for (std::size_t i = 0; i < a.class_of.size(); ++i) {
    if (b.is_zero[i] && !a.is_zero[i]) return false;
    const auto [it, fresh] = to_a.emplace(b.class_of[i], a.class_of[i]);
    if (!fresh && it->second != a.class_of[i]) return false;
  }
  return true;
}

namespace {

// Coarsest common refinement-free join of the two partitions: the theory of
// the intersection of the two varieties, as far as this window can carry it.
BoundedTheory window_meet(const BoundedTheory& a, const BoundedTheory& b) {
  check_same_window(a, b);
  const std::size_t total = a.class_of.size();
  std::vector<int> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  const auto unite = [&](int x, int y) { parent[static_cast<std::size_t>(find(x))] = find(y); };

  std::map<int, int> first_a, first_b;
  for (std::size_t i = 0; i < total; ++i) {
    const int self = static_cast<int>(i);
    const auto [ita, fa] = first_a.emplace(a.class_of[i], self);
    if (!fa) unite(self, ita->second);
    const auto [itb, fb] = first_b.emplace(b.class_of[i], self);
    if (!fb) unite(self, itb->second);
  }

  std::map<int, bool> root_zero;
  for (std::size_t i = 0; i < total; ++i)
    if (a.is_zero[i] || b.is_zero[i]) root_zero[find(static_cast<int>(i))] = true;

  BoundedTheory t;
  t.max_len = a.max_len;
  t.max_letters = a.max_letters;
  t.universe = a.universe;
  std::map<int, int> ids;
  for (std::size_t i = 0; i < total; ++i) {
    const int root = find(static_cast<int>(i));
    const auto [it, fresh] = ids.emplace(root, static_cast<int>(ids.size()));
    t.class_of.push_back(it->second);
    t.is_zero.push_back(root_zero.count(root) != 0);
  }
  return t;
}

// Positive goals must come with a replayable trace whose step permutations
// compose to the goal arrangement; arrangements outside the join must stay
// underivable.
bool splicing_check(const VarietyHandle& dv, const VarietyHandle& dg,
                    const perm::Subgroup& join, int n) {
  deduce::Basis merged = defining_basis(dv);
  const auto extra = defining_basis(dg);
  merged.identities.insert(merged.identities.end(), extra.identities.begin(),
                           extra.identities.end());
  const auto sym = perm::Subgroup::symmetric(n);
  for (const auto& pi : sym.members()) {
    if (pi.is_identity()) continue;
    const auto goal = words::permutation_identity(n, pi);
    const auto res = deduce::derive(merged, goal);
    if (!join.contains(pi)) {
      if (res.proved) return false;
      continue;
    }
    if (!res.proved || !res.trace) return false;
    if (!deduce::replay(merged, *res.trace)) return false;
    const auto carried = deduce::trace_permutation(*res.trace);
    if (!carried || !(*carried == pi)) return false;
  }
  return true;
}

}  // namespace

WitnessReport witness_harness(const perm::Subgroup& v, const perm::Subgroup& g1,
                              const perm::Subgroup& g2, int n) {
  if (n != 3 && n != 4)
    fail(errc::invalid_argument, "the witness harness supports degrees 3 and 4");
  if (v.degree() != n || g1.degree() != n || g2.degree() != n)
    fail(errc::invalid_argument, "all three subgroups must have degree n");
  if (g1 == g2) fail(errc::precondition_failed, "the two subgroups must differ");
  const auto join1 = perm::subgroup_join(v, g1);
  const auto join2 = perm::subgroup_join(v, g2);
  if (!(join1 == join2)) fail(errc::precondition_failed, "the subgroup joins differ");
  const auto meet1 = perm::subgroup_meet(v, g1);
  const auto meet2 = perm::subgroup_meet(v, g2);
  if (!(meet1 == meet2)) fail(errc::precondition_failed, "the subgroup meets differ");

  WitnessReport rep;
  rep.degree = n;
  rep.v_name = perm::display_name(v);
  rep.g1_name = perm::display_name(g1);
  rep.g2_name = perm::display_name(g2);
  rep.detail = "subgroup join " + perm::display_name(join1) + ", subgroup meet " +
               perm::display_name(meet1);

  const auto dv = VarietyHandle::subgroup_derived(v, n);
  const auto d1 = VarietyHandle::subgroup_derived(g1, n);
  const auto d2 = VarietyHandle::subgroup_derived(g2, n);
  const int window = n + 1;
  const auto tv = bounded_theory(dv, window, window);
  const auto t1 = bounded_theory(d1, window, window);
  const auto t2 = bounded_theory(d2, window, window);

  rep.joins_coincide = theory_intersection(tv, t1) == theory_intersection(tv, t2);
  rep.zero_parts_equal = tv.is_zero == t1.is_zero && t1.is_zero == t2.is_zero;
  rep.varieties_differ = !(t1 == t2);

  const auto dj = VarietyHandle::subgroup_derived(join1, n);
  const auto tj = bounded_theory(dj, window, window);
  const auto lhs_meet = window_meet(tv, t1);
  const auto rhs_meet = window_meet(tv, t2);
  rep.meets_coincide = lhs_meet == rhs_meet && lhs_meet == tj;

  rep.splicing_ok = splicing_check(dv, d1, join1, n) && splicing_check(dv, d2, join1, n);
  return rep;
}

namespace {

struct UnaryValue {
  bool group = false;     // whether a pseudoinversion was applied anywhere
  long long exponent = 0;  // letter count if !group, else the group exponent
};

UnaryValue unary_eval(const Word& w) {
  UnaryValue acc;
  bool first = true;
  for (const auto& item : w.items()) {
    UnaryValue cur;
    if (std::holds_alternative<std::string>(item)) {
      cur = UnaryValue{false, 1};
    } else {
      const auto inner = unary_eval(*std::get<Word::Bar>(item).inner);
      cur = UnaryValue{true, -inner.exponent};
    }
    if (first) {
      acc = cur;
      first = false;
    } else {
      acc = UnaryValue{acc.group || cur.group, acc.exponent + cur.exponent};
    }
  }
  return acc;
}

}  // namespace

UnaryNormalForm normalize_one_letter(const Word& w) {
  if (words::content(w).size() != 1)
    fail(errc::invalid_argument, "only one-letter words have this normal form");
  const auto val = unary_eval(w);
  if (!val.group)
    fail(errc::invalid_argument, "the word applies no pseudoinversion");
  if (val.exponent <= -1) return UnaryNormalForm{0, -val.exponent};
  if (val.exponent == 0) return UnaryNormalForm{1, 1};
  return UnaryNormalForm{val.exponent + 1, 1};
}

words::Word unary_normal_form_word(const UnaryNormalForm& nf, const std::string& letter) {
  std::optional<Word> acc;
  const auto append = [&](const Word& piece) {
    acc = acc ? Word::concat(*acc, piece) : piece;
  };
  for (long long i = 0; i < nf.p; ++i) append(Word::letter(letter));
  for (long long i = 0; i < nf.q; ++i) append(Word::bar(Word::letter(letter)));
  return *acc;
}

bool holds_in_semilattice(const Identity& id) {
  if (id.is_zero()) return false;
  return words::content(id.lhs()) == words::content(id.rhs());
}

}  // namespace varlat::variety

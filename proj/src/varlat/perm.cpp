#include "varlat/perm.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace varlat::perm {

namespace {

constexpr int kMaxDegree = 6;

void check_degree(int degree) {
  if (degree < 1) fail(errc::invalid_argument, "degree must be positive");
  if (degree > kMaxDegree)
    fail(errc::degree_too_large,
         "degree " + std::to_string(degree) + " exceeds the supported cap of 6");
}

}  // namespace

Permutation::Permutation(std::vector<int> images_one_indexed)
    : image_(std::move(images_one_indexed)) {
  const int n = degree();
  if (n < 1 || n > kMaxDegree) check_degree(n);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : image_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
      fail(errc::invalid_argument, "image vector is not a permutation");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int degree) {
  check_degree(degree);
  std::vector<int> img(static_cast<std::size_t>(degree));
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(int degree, std::string_view text) {
  check_degree(degree);
  std::vector<int> img(static_cast<std::size_t>(degree));
  std::iota(img.begin(), img.end(), 1);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    skip_ws();
    if (pos != text.size()) fail(errc::parse, "trailing input after identity permutation");
    return Permutation(std::move(img));
  }
  bool any_cycle = false;
  while (pos < text.size()) {
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] != '(') fail(errc::parse, "expected '(' in cycle notation");
    ++pos;
    std::vector<int> cycle;
    while (pos < text.size() && text[pos] != ')') {
      char c = text[pos];
      if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
        ++pos;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(c)))
        fail(errc::parse, "cycle points must be decimal digits");
      int point = c - '0';
      if (point < 1 || point > degree)
        fail(errc::parse, "cycle point " + std::string(1, c) + " out of range");
      if (std::find(cycle.begin(), cycle.end(), point) != cycle.end())
        fail(errc::parse, "repeated point inside a cycle");
      cycle.push_back(point);
      ++pos;
    }
    if (pos >= text.size()) fail(errc::parse, "unterminated cycle");
    ++pos;  // ')'
    if (cycle.empty()) {
      any_cycle = true;  // "()" denotes the identity
      continue;
    }
    // Apply the cycle on top of what has been read so far (left to right).
    std::vector<int> next = img;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int from = cycle[i];
      int to = cycle[(i + 1) % cycle.size()];
      // first map through img, then through this cycle
      for (int p = 1; p <= degree; ++p) {
        if (img[static_cast<std::size_t>(p - 1)] == from)
          next[static_cast<std::size_t>(p - 1)] = to;
      }
    }
    img = std::move(next);
    any_cycle = true;
    skip_ws();
  }
  if (!any_cycle) fail(errc::parse, "empty permutation text");
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= degree(); ++i)
    if (apply(i) != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (int i = 1; i <= degree(); ++i) inv[static_cast<std::size_t>(apply(i) - 1)] = i;
  return Permutation(std::move(inv));
}

std::string Permutation::to_cycles() const {
  std::vector<bool> done(image_.size(), false);
  std::string out;
  for (int start = 1; start <= degree(); ++start) {
    if (done[static_cast<std::size_t>(start - 1)] || apply(start) == start) continue;
    out += '(';
    int p = start;
    do {
      done[static_cast<std::size_t>(p - 1)] = true;
      out += static_cast<char>('0' + p);
      p = apply(p);
    } while (p != start);
    out += ')';
  }
  if (out.empty()) return "e";
  return out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    fail(errc::invalid_argument, "cannot compose permutations of different degree");
  std::vector<int> img(p.image_.size());
  for (int i = 1; i <= p.degree(); ++i)
    img[static_cast<std::size_t>(i - 1)] = q.apply(p.apply(i));
  return Permutation(std::move(img));
}

Subgroup::Subgroup(int degree, std::vector<Permutation> members)
    : degree_(degree), members_(std::move(members)) {
  check_degree(degree);
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (members_.empty()) fail(errc::invalid_argument, "a subgroup cannot be empty");
  for (const auto& m : members_)
    if (m.degree() != degree)
      fail(errc::invalid_argument, "member degree does not match subgroup degree");
  // Closure is the caller's responsibility for this constructor; verify it.
  for (const auto& a : members_)
    for (const auto& b : members_)
      if (!std::binary_search(members_.begin(), members_.end(), compose(a, b)))
        fail(errc::invalid_argument, "member list is not closed under composition");
}

Subgroup Subgroup::trivial(int degree) {
  return Subgroup(degree, {Permutation::identity(degree)});
}

Subgroup Subgroup::symmetric(int degree) {
  check_degree(degree);
  std::vector<int> img(static_cast<std::size_t>(degree));
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> all;
  do {
    all.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return Subgroup(degree, std::move(all));
}

namespace {

bool is_even(const Permutation& p) {
  int transpositions = 0;
  std::vector<bool> done(static_cast<std::size_t>(p.degree()), false);
  for (int start = 1; start <= p.degree(); ++start) {
    if (done[static_cast<std::size_t>(start - 1)]) continue;
    int len = 0;
    int q = start;
    do {
      done[static_cast<std::size_t>(q - 1)] = true;
      q = p.apply(q);
      ++len;
    } while (q != start);
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

}  // namespace

Subgroup Subgroup::alternating(int degree) {
  Subgroup s = symmetric(degree);
  std::vector<Permutation> even;
  for (const auto& p : s.members())
    if (is_even(p)) even.push_back(p);
  return Subgroup(degree, std::move(even));
}

Subgroup Subgroup::closure(int degree, std::span<const Permutation> generators) {
  check_degree(degree);
  std::set<Permutation> closed;
  closed.insert(Permutation::identity(degree));
  std::vector<Permutation> queue(closed.begin(), closed.end());
  for (const auto& g : generators) {
    if (g.degree() != degree)
      fail(errc::invalid_argument, "generator degree does not match");
    if (closed.insert(g).second) queue.push_back(g);
  }
  std::vector<Permutation> gens(generators.begin(), generators.end());
  while (!queue.empty()) {
    Permutation p = queue.back();
    queue.pop_back();
    for (const auto& g : gens) {
      for (const Permutation& prod : {compose(p, g), compose(g, p)}) {
        if (closed.insert(prod).second) queue.push_back(prod);
      }
    }
  }
  return Subgroup(degree, std::vector<Permutation>(closed.begin(), closed.end()));
}

bool Subgroup::contains(const Permutation& p) const {
  return std::binary_search(members_.begin(), members_.end(), p);
}

bool Subgroup::contains(const Subgroup& other) const {
  if (other.degree_ != degree_) return false;
  return std::includes(members_.begin(), members_.end(), other.members_.begin(),
                       other.members_.end());
}

Subgroup subgroup_meet(const Subgroup& a, const Subgroup& b) {
  if (a.degree() != b.degree())
    fail(errc::invalid_argument, "subgroup degrees differ");
  std::vector<Permutation> common;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(),
                        b.members().end(), std::back_inserter(common));
  return Subgroup(a.degree(), std::move(common));
}

Subgroup subgroup_join(const Subgroup& a, const Subgroup& b) {
  if (a.degree() != b.degree())
    fail(errc::invalid_argument, "subgroup degrees differ");
  std::vector<Permutation> gens = a.members();
  gens.insert(gens.end(), b.members().begin(), b.members().end());
  return Subgroup::closure(a.degree(), gens);
}

namespace {

// Dense machinery for subgroup enumeration: index every element of S_n and
// work with 128-bit member masks over the Cayley table.
struct GroupTable {
  int degree = 0;
  std::vector<Permutation> elements;          // sorted
  std::vector<std::uint16_t> cayley;          // n! x n!
  int order = 0;

  int index_of(const Permutation& p) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), p);
    return static_cast<int>(it - elements.begin());
  }
};

GroupTable build_table(int degree) {
  GroupTable t;
  t.degree = degree;
  t.elements = Subgroup::symmetric(degree).members();
  t.order = static_cast<int>(t.elements.size());
  t.cayley.resize(static_cast<std::size_t>(t.order) * static_cast<std::size_t>(t.order));
  for (int a = 0; a < t.order; ++a)
    for (int b = 0; b < t.order; ++b)
      t.cayley[static_cast<std::size_t>(a) * t.order + b] = static_cast<std::uint16_t>(
          t.index_of(compose(t.elements[static_cast<std::size_t>(a)],
                             t.elements[static_cast<std::size_t>(b)])));
  return t;
}

struct Mask {
  std::array<std::uint64_t, 2> bits{0, 0};

  bool test(int i) const { return (bits[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1; }
  void set(int i) { bits[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63); }
  auto operator<=>(const Mask&) const = default;
};

Mask close_mask(const GroupTable& t, Mask seed) {
  std::vector<int> work;
  std::vector<int> have;
  for (int i = 0; i < t.order; ++i)
    if (seed.test(i)) {
      work.push_back(i);
      have.push_back(i);
    }
  while (!work.empty()) {
    int a = work.back();
    work.pop_back();
    const std::size_t row = static_cast<std::size_t>(a) * t.order;
    for (std::size_t k = 0; k < have.size(); ++k) {
      int b = have[k];
      for (int c : {static_cast<int>(t.cayley[row + b]),
                    static_cast<int>(t.cayley[static_cast<std::size_t>(b) * t.order + a])}) {
        if (!seed.test(c)) {
          seed.set(c);
          work.push_back(c);
          have.push_back(c);
        }
      }
    }
  }
  return seed;
}

}  // namespace

std::vector<Subgroup> all_subgroups(int degree) {
  check_degree(degree);
  // The member masks hold 128 bits, enough for every element of S_5 but not S_6.
  if (degree > 5)
    fail(errc::degree_too_large, "subgroup enumeration is supported for degrees up to 5");
  GroupTable t = build_table(degree);
  const int id = t.index_of(Permutation::identity(degree));

  Mask trivial_mask;
  trivial_mask.set(id);

  std::set<Mask> found;
  found.insert(trivial_mask);
  std::vector<Mask> queue{trivial_mask};
  while (!queue.empty()) {
    Mask h = queue.back();
    queue.pop_back();
    for (int g = 0; g < t.order; ++g) {
      if (h.test(g)) continue;
      Mask extended = h;
      extended.set(g);
      Mask closed = close_mask(t, extended);
      if (found.insert(closed).second) queue.push_back(closed);
    }
  }

  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (const Mask& m : found) {
    std::vector<Permutation> members;
    for (int i = 0; i < t.order; ++i)
      if (m.test(i)) members.push_back(t.elements[static_cast<std::size_t>(i)]);
    out.emplace_back(degree, std::move(members));
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members() < b.members();
  });
  return out;
}

namespace {

// Returns the points moved by any member.
std::vector<int> support(const Subgroup& g) {
  std::vector<int> out;
  for (int p = 1; p <= g.degree(); ++p) {
    for (const auto& m : g.members()) {
      if (m.apply(p) != p) {
        out.push_back(p);
        break;
      }
    }
  }
  return out;
}

std::vector<const Permutation*> transpositions_in(const Subgroup& g) {
  std::vector<const Permutation*> out;
  for (const auto& m : g.members()) {
    int moved = 0;
    for (int p = 1; p <= g.degree(); ++p)
      if (m.apply(p) != p) ++moved;
    if (moved == 2) out.push_back(&m);
  }
  return out;
}

std::string cycle_digits(const Permutation& p, int start) {
  std::string out;
  int q = start;
  do {
    out += static_cast<char>('0' + q);
    q = p.apply(q);
  } while (q != start);
  return out;
}

}  // namespace

std::string conventional_name(const Subgroup& g) {
  const int n = g.degree();
  if (g.order() == 1) return "T";
  if (g == Subgroup::symmetric(n)) return "S" + std::to_string(n);
  // A_3 is the cyclic group on {1,2,3} and keeps its C-style name.
  if (n >= 4 && g == Subgroup::alternating(n)) return "A" + std::to_string(n);

  auto sup = support(g);

  if (g.order() == 2) {
    // Generated by a single transposition.
    auto tr = transpositions_in(g);
    if (tr.size() == 1 && sup.size() == 2)
      return "T" + std::to_string(sup[0]) + std::to_string(sup[1]);
    return "";
  }

  if (g.order() == 3 && sup.size() == 3) {
    std::string name = "C";
    for (int p : sup) name += static_cast<char>('0' + p);
    return name;
  }

  if (g.order() == 4) {
    // Cyclic of order 4: name it by its lexicographically least 4-cycle
    // written from its smallest point.
    std::vector<std::string> four_cycles;
    for (const auto& m : g.members()) {
      int moved = 0;
      for (int p = 1; p <= n; ++p)
        if (m.apply(p) != p) ++moved;
      if (moved == 4) {
        // Distinguish a 4-cycle from a double transposition.
        int start = 0;
        for (int p = 1; p <= n; ++p)
          if (m.apply(p) != p) {
            start = p;
            break;
          }
        std::string cyc = cycle_digits(m, start);
        if (cyc.size() == 4) four_cycles.push_back(cyc);
      }
    }
    if (!four_cycles.empty()) {
      std::sort(four_cycles.begin(), four_cycles.end());
      return "C" + four_cycles.front();
    }
    // Klein groups: V4 is the one whose non-identity members are the three
    // double transpositions of S_4; those generated by two disjoint
    // transpositions are named P<ij>,<kl>.
    auto tr = transpositions_in(g);
    if (n == 4 && tr.empty() && sup.size() == 4) return "V4";
    if (tr.size() == 2) {
      std::array<std::array<int, 2>, 2> pairs{};
      for (std::size_t k = 0; k < 2; ++k) {
        int idx = 0;
        for (int p = 1; p <= n; ++p)
          if (tr[k]->apply(p) != p) pairs[k][static_cast<std::size_t>(idx++ % 2)] = p;
        std::sort(pairs[k].begin(), pairs[k].end());
      }
      std::sort(pairs.begin(), pairs.end());
      std::string name = "P";
      name += static_cast<char>('0' + pairs[0][0]);
      name += static_cast<char>('0' + pairs[0][1]);
      name += ',';
      name += static_cast<char>('0' + pairs[1][0]);
      name += static_cast<char>('0' + pairs[1][1]);
      return name;
    }
    return "";
  }

  // Point stabilizers Stab_n(i), of order (n-1)!.
  int factorial = 1;
  for (int k = 2; k < n; ++k) factorial *= k;
  if (g.order() == factorial) {
    for (int i = 1; i <= n; ++i) {
      bool fixes = true;
      for (const auto& m : g.members())
        if (m.apply(i) != i) {
          fixes = false;
          break;
        }
      if (fixes) return "Stab" + std::to_string(n) + "(" + std::to_string(i) + ")";
    }
  }
  return "";
}

std::vector<std::string> name_subgroups(const std::vector<Subgroup>& groups) {
  std::vector<std::string> names(groups.size());
  std::map<int, int> generic_counter;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    names[i] = conventional_name(groups[i]);
    if (names[i].empty()) {
      int k = generic_counter[groups[i].order()]++;
      names[i] = "G" + std::to_string(groups[i].order()) + "_" + std::to_string(k);
    }
  }
  return names;
}

std::string display_name(const Subgroup& g) {
  std::string name = conventional_name(g);
  if (!name.empty()) return name;
  return "G" + std::to_string(g.order());
}

}  // namespace varlat::perm

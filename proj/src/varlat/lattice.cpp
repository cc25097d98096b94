#include "varlat/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace varlat::lattice {

FiniteLattice FiniteLattice::from_covers(std::size_t n,
                                         std::span<const std::pair<int, int>> covers,
                                         std::vector<std::string> labels) {
  if (n == 0) fail(errc::invalid_argument, "a lattice needs at least one element");
  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) leq[i * n + i] = 1;
  for (const auto& [lo, hi] : covers) {
    if (lo < 0 || hi < 0 || static_cast<std::size_t>(lo) >= n ||
        static_cast<std::size_t>(hi) >= n)
      fail(errc::invalid_argument, "cover pair references an element out of range");
    if (lo == hi) fail(errc::cycle_detected, "cover pair relates an element to itself");
    leq[static_cast<std::size_t>(lo) * n + static_cast<std::size_t>(hi)] = 1;
  }
  // Reflexive-transitive closure.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (!leq[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (leq[k * n + j]) leq[i * n + j] = 1;
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (leq[i * n + j] && leq[j * n + i])
        fail(errc::cycle_detected, "cover relation contains a cycle through element " +
                                       std::to_string(i));
  return from_leq(n, std::move(leq), std::move(labels));
}

FiniteLattice FiniteLattice::from_leq(std::size_t n, std::vector<std::uint8_t> leq,
                                      std::vector<std::string> labels) {
  if (n == 0) fail(errc::invalid_argument, "a lattice needs at least one element");
  if (leq.size() != n * n) fail(errc::invalid_argument, "order matrix has wrong size");
  if (!labels.empty()) {
    if (labels.size() != n) fail(errc::invalid_argument, "label count does not match");
    std::set<std::string> distinct(labels.begin(), labels.end());
    if (distinct.size() != n) fail(errc::invalid_argument, "labels must be distinct");
  }
  FiniteLattice l;
  l.n_ = n;
  l.leq_ = std::move(leq);
  l.labels_ = std::move(labels);
  l.compute_tables();
  return l;
}

void FiniteLattice::compute_tables() {
  const std::size_t n = n_;
  meet_.assign(n * n, -1);
  join_.assign(n * n, -1);
  auto name = [this](std::size_t x) {
    return labels_.empty() ? std::to_string(x) : labels_[x];
  };
  std::vector<std::size_t> bounds;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x; y < n; ++y) {
      // meet: the common lower bound that dominates all the others
      bounds.clear();
      for (std::size_t z = 0; z < n; ++z)
        if (leq_[z * n + x] && leq_[z * n + y]) bounds.push_back(z);
      int meet = -1;
      for (std::size_t z : bounds) {
        bool dominates = true;
        for (std::size_t w : bounds)
          if (!leq_[w * n + z]) {
            dominates = false;
            break;
          }
        if (dominates) {
          meet = static_cast<int>(z);
          break;
        }
      }
      if (meet < 0)
        fail(errc::not_a_lattice,
             "elements " + name(x) + " and " + name(y) + " have no meet");
      // join: the common upper bound below all the others
      bounds.clear();
      for (std::size_t z = 0; z < n; ++z)
        if (leq_[x * n + z] && leq_[y * n + z]) bounds.push_back(z);
      int join = -1;
      for (std::size_t z : bounds) {
        bool minimal = true;
        for (std::size_t w : bounds)
          if (!leq_[z * n + w]) {
            minimal = false;
            break;
          }
        if (minimal) {
          join = static_cast<int>(z);
          break;
        }
      }
      if (join < 0)
        fail(errc::not_a_lattice,
             "elements " + name(x) + " and " + name(y) + " have no join");
      meet_[x * n + y] = meet_[y * n + x] = meet;
      join_[x * n + y] = join_[y * n + x] = join;
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (leq_[x * n + static_cast<std::size_t>(bottom_)]) bottom_ = static_cast<int>(x);
    if (leq_[static_cast<std::size_t>(top_) * n + x]) top_ = static_cast<int>(x);
  }
}

std::string FiniteLattice::label(int x) const {
  if (labels_.empty()) return std::to_string(x);
  return labels_[static_cast<std::size_t>(x)];
}

std::vector<std::pair<int, int>> FiniteLattice::covers() const {
  std::vector<std::pair<int, int>> out;
  const std::size_t n = n_;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !leq_[a * n + b]) continue;
      bool direct = true;
      for (std::size_t c = 0; c < n && direct; ++c)
        if (c != a && c != b && leq_[a * n + c] && leq_[c * n + b]) direct = false;
      if (direct) out.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  return out;
}

std::vector<int> FiniteLattice::atoms() const {
  std::vector<int> out;
  for (const auto& [lo, hi] : covers())
    if (lo == bottom_) out.push_back(hi);
  std::sort(out.begin(), out.end());
  return out;
}

ElementClassification classify_element(const FiniteLattice& l, int x) {
  const int n = static_cast<int>(l.size());
  ElementClassification c;
  c.element = x;
  c.neutral = true;
  c.distributive = true;
  c.standard = true;
  c.modular = true;
  c.cancellable = true;
  for (int y = 0; y < n; ++y) {
    for (int z = 0; z < n; ++z) {
      const int xy_j = l.join(x, y), xz_j = l.join(x, z);
      const int xy_m = l.meet(x, y), xz_m = l.meet(x, z);
      if (l.meet(l.meet(xy_j, l.join(y, z)), l.join(z, x)) !=
          l.join(l.join(xy_m, l.meet(y, z)), l.meet(z, x)))
        c.neutral = false;
      if (l.join(x, l.meet(y, z)) != l.meet(xy_j, xz_j)) c.distributive = false;
      if (l.meet(xz_j, y) != l.join(xy_m, l.meet(y, z))) c.standard = false;
      if (l.leq(y, z) && l.meet(xy_j, z) != l.join(xz_m, y)) c.modular = false;
      if (xy_j == xz_j && xy_m == xz_m && y != z) c.cancellable = false;
    }
  }
  return c;
}

std::vector<ElementClassification> classify_all(const FiniteLattice& l) {
  std::vector<ElementClassification> out;
  out.reserve(l.size());
  for (int x = 0; x < static_cast<int>(l.size()); ++x) out.push_back(classify_element(l, x));
  return out;
}

std::vector<int> principal_filter(const FiniteLattice& l, int a) {
  std::vector<int> out;
  for (int x = 0; x < static_cast<int>(l.size()); ++x)
    if (l.leq(a, x)) out.push_back(x);
  return out;
}

bool is_distributive_lattice(const FiniteLattice& l) {
  const int n = static_cast<int>(l.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) return false;
  return true;
}

FiniteLattice direct_product(const FiniteLattice& a, const FiniteLattice& b) {
  const std::size_t na = a.size(), nb = b.size();
  const std::size_t n = na * nb;
  std::vector<std::uint8_t> leq(n * n, 0);
  auto id = [nb](std::size_t i, std::size_t j) { return i * nb + j; };
  for (std::size_t i1 = 0; i1 < na; ++i1)
    for (std::size_t j1 = 0; j1 < nb; ++j1)
      for (std::size_t i2 = 0; i2 < na; ++i2)
        for (std::size_t j2 = 0; j2 < nb; ++j2)
          if (a.leq(static_cast<int>(i1), static_cast<int>(i2)) &&
              b.leq(static_cast<int>(j1), static_cast<int>(j2)))
            leq[id(i1, j1) * n + id(i2, j2)] = 1;
  std::vector<std::string> labels;
  if (a.has_labels() || b.has_labels()) {
    labels.reserve(n);
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t j = 0; j < nb; ++j)
        labels.push_back("(" + a.label(static_cast<int>(i)) + "," +
                         b.label(static_cast<int>(j)) + ")");
  }
  return FiniteLattice::from_leq(n, std::move(leq), std::move(labels));
}

FiniteLattice adjoin_top(const FiniteLattice& l) {
  const std::size_t n = l.size() + 1;
  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j + 1 < n; ++j)
      leq[i * n + j] = l.leq(static_cast<int>(i), static_cast<int>(j)) ? 1 : 0;
  for (std::size_t i = 0; i < n; ++i) leq[i * n + (n - 1)] = 1;
  std::vector<std::string> labels;
  if (l.has_labels()) {
    for (std::size_t i = 0; i + 1 < n; ++i) labels.push_back(l.label(static_cast<int>(i)));
    std::string top = "TOP";
    while (std::find(labels.begin(), labels.end(), top) != labels.end()) top += "'";
    labels.push_back(top);
  }
  return FiniteLattice::from_leq(n, std::move(leq), std::move(labels));
}

std::vector<int> sublattice_closure(const FiniteLattice& l, std::vector<int> seed) {
  std::set<int> closed(seed.begin(), seed.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> snapshot(closed.begin(), closed.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i)
      for (std::size_t j = i; j < snapshot.size(); ++j) {
        if (closed.insert(l.meet(snapshot[i], snapshot[j])).second) grew = true;
        if (closed.insert(l.join(snapshot[i], snapshot[j])).second) grew = true;
      }
  }
  return std::vector<int>(closed.begin(), closed.end());
}

bool neutral_via_generated_sublattice(const FiniteLattice& l, int x) {
  const int n = static_cast<int>(l.size());
  for (int y = 0; y < n; ++y)
    for (int z = 0; z < n; ++z) {
      auto sub = sublattice_closure(l, {x, y, z});
      for (int a : sub)
        for (int b : sub)
          for (int c : sub)
            if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c)))
              return false;
    }
  return true;
}

namespace {

struct IsoInvariant {
  int down = 0, up = 0, lower_covers = 0, upper_covers = 0;
  auto operator<=>(const IsoInvariant&) const = default;
};

std::vector<IsoInvariant> invariants(const FiniteLattice& l) {
  const int n = static_cast<int>(l.size());
  std::vector<IsoInvariant> inv(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (l.leq(y, x)) ++inv[static_cast<std::size_t>(x)].down;
      if (l.leq(x, y)) ++inv[static_cast<std::size_t>(x)].up;
    }
  for (const auto& [lo, hi] : l.covers()) {
    ++inv[static_cast<std::size_t>(lo)].upper_covers;
    ++inv[static_cast<std::size_t>(hi)].lower_covers;
  }
  return inv;
}

bool extend_iso(const FiniteLattice& a, const FiniteLattice& b,
                const std::vector<IsoInvariant>& ia, const std::vector<IsoInvariant>& ib,
                const std::vector<int>& order, std::size_t k, std::vector<int>& image,
                std::vector<bool>& used) {
  if (k == order.size()) return true;
  const int x = order[k];
  const int n = static_cast<int>(a.size());
  for (int y = 0; y < n; ++y) {
    if (used[static_cast<std::size_t>(y)]) continue;
    if (ia[static_cast<std::size_t>(x)] != ib[static_cast<std::size_t>(y)]) continue;
    bool ok = true;
    for (std::size_t j = 0; j < k && ok; ++j) {
      const int xp = order[j];
      const int yp = image[static_cast<std::size_t>(xp)];
      if (a.leq(x, xp) != b.leq(y, yp) || a.leq(xp, x) != b.leq(yp, y)) ok = false;
    }
    if (!ok) continue;
    image[static_cast<std::size_t>(x)] = y;
    used[static_cast<std::size_t>(y)] = true;
    if (extend_iso(a, b, ia, ib, order, k + 1, image, used)) return true;
    used[static_cast<std::size_t>(y)] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> are_isomorphic(const FiniteLattice& a,
                                               const FiniteLattice& b) {
  if (a.size() != b.size()) return std::nullopt;
  auto ia = invariants(a);
  auto ib = invariants(b);
  {
    auto sa = ia;
    auto sb = ib;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  // Most constrained first: rare invariant classes up front.
  std::map<IsoInvariant, int> freq;
  for (const auto& v : ia) ++freq[v];
  std::vector<int> order(a.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    int fx = freq[ia[static_cast<std::size_t>(x)]];
    int fy = freq[ia[static_cast<std::size_t>(y)]];
    if (fx != fy) return fx < fy;
    return x < y;
  });
  std::vector<int> image(a.size(), -1);
  std::vector<bool> used(a.size(), false);
  if (extend_iso(a, b, ia, ib, order, 0, image, used)) return image;
  return std::nullopt;
}

NeutralAtomReport verify_neutral_atom_conditions(const FiniteLattice& l) {
  NeutralAtomReport report;
  const int n = static_cast<int>(l.size());
  for (int a : l.atoms()) {
    if (!classify_element(l, a).neutral) continue;
    report.neutral_atoms.push_back(a);
    for (int x = 0; x < n; ++x) {
      const bool plain = classify_element(l, x).cancellable;
      const bool joined = classify_element(l, l.join(x, a)).cancellable;
      bool filtered = true;
      for (int y = 0; y < n && filtered; ++y) {
        if (!l.leq(a, y)) continue;
        for (int z = 0; z < n && filtered; ++z) {
          if (!l.leq(a, z)) continue;
          if (l.join(x, y) == l.join(x, z) && l.meet(x, y) == l.meet(x, z) && y != z)
            filtered = false;
        }
      }
      if (plain != joined || plain != filtered) {
        NeutralAtomReport::Violation v;
        v.atom = a;
        v.x = x;
        v.detail = "cancellable=" + std::to_string(plain) +
                   " joined=" + std::to_string(joined) +
                   " filtered=" + std::to_string(filtered);
        report.violations.push_back(v);
      }
    }
  }
  return report;
}

FiniteLattice random_lattice(std::mt19937_64& rng, int max_size) {
  if (max_size < 1) fail(errc::invalid_argument, "max_size must be positive");
  for (;;) {
    const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_size));
    std::vector<std::pair<int, int>> covers;
    if (n >= 2) {
      // Everything sits between a forced bottom 0 and forced top n-1.
      for (int i = 1; i < n; ++i) {
        const int preds = 1 + static_cast<int>(rng() % 2);
        for (int k = 0; k < preds; ++k)
          covers.emplace_back(static_cast<int>(rng() % static_cast<std::uint64_t>(i)), i);
      }
      for (int i = 1; i + 1 < n; ++i) covers.emplace_back(i, n - 1);
    }
    try {
      return FiniteLattice::from_covers(static_cast<std::size_t>(n), covers);
    } catch (const Error& e) {
      if (e.code() == errc::not_a_lattice || e.code() == errc::cycle_detected) continue;
      throw;
    }
  }
}

}  // namespace varlat::lattice

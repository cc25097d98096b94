#include "varlat/verify.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "varlat/deduction.hpp"
#include "varlat/grouplat.hpp"
#include "varlat/lattice.hpp"
#include "varlat/perm.hpp"
#include "varlat/variety.hpp"
#include "varlat/words.hpp"

namespace varlat::verify {

bool SuiteReport::ok() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

using nlohmann::json;

void add(SuiteReport& rep, std::string name, bool pass, std::string detail) {
  rep.checks.push_back(CheckResult{std::move(name), pass, std::move(detail)});
}

json load_fixture(const Options& opt, const std::string& name) {
  const std::filesystem::path path = std::filesystem::path(opt.fixtures_dir) / name;
  std::ifstream in(path);
  if (!in) fail(errc::invalid_argument, "cannot open fixture file " + path.string());
  json doc = json::parse(in, nullptr, false);
  if (doc.is_discarded())
    fail(errc::parse, "fixture file " + path.string() + " is not valid JSON");
  return doc;
}

std::string join_list(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += ", ";
    out += s;
  }
  return out;
}

// ---------------------------------------------------------------------------
// figure1

std::map<std::string, std::vector<std::string>> upper_covers_by_label(
    const lattice::FiniteLattice& l) {
  std::map<std::string, std::vector<std::string>> out;
  for (const auto& [lo, hi] : l.covers()) out[l.label(lo)].push_back(l.label(hi));
  for (auto& [k, v] : out) std::sort(v.begin(), v.end());
  return out;
}

SuiteReport figure1_suite(const Options& opt) {
  SuiteReport rep{"figure1", {}};
  if (opt.cap < 3)
    fail(errc::invalid_argument, "the figure suite needs a cap of at least 3");
  const json fx = load_fixture(opt, "figure1_expected.json");
  const auto expected_counts = fx.at("element_counts");
  const std::string expected_bottom = fx.at("bottom").get<std::string>();
  const std::string expected_top = fx.at("top").get<std::string>();

  const auto chain2 =
      lattice::FiniteLattice::from_covers(2, std::vector<std::pair<int, int>>{{0, 1}});

  for (int cap = 3; cap <= opt.cap; ++cap) {
    const std::string prefix = "cap " + std::to_string(cap) + ": ";
    const auto fam = variety::family_lattice(cap);
    const auto& l = fam.lattice;

    const auto count_key = std::to_string(cap);
    if (expected_counts.contains(count_key)) {
      const int expected = expected_counts.at(count_key).get<int>();
      add(rep, prefix + "element count", static_cast<int>(l.size()) == expected,
          std::to_string(l.size()) + " elements, expected " + std::to_string(expected));
    }

    add(rep, prefix + "distributive", lattice::is_distributive_lattice(l), "");

    add(rep, prefix + "bottom and top",
        l.label(l.bottom()) == expected_bottom && l.label(l.top()) == expected_top,
        "bottom " + l.label(l.bottom()) + ", top " + l.label(l.top()));

    const auto uppers = upper_covers_by_label(l);
    for (const auto& [label, expected_list] : fx.at("exact_covers").items()) {
      std::vector<std::string> expected = expected_list.get<std::vector<std::string>>();
      std::sort(expected.begin(), expected.end());
      const auto it = uppers.find(label);
      std::vector<std::string> got = it == uppers.end() ? std::vector<std::string>{} : it->second;
      std::string detail = "covers of " + label + ": " + join_list(got);
      if (label == "X_{2,2}=Y_{2,2}")
        detail += "; X_{2,3} lies above it but the relation factors through Y_{2,3}";
      add(rep, prefix + "covers of " + label, got == expected, std::move(detail));
    }

    auto label_index = [&](const std::string& want) {
      for (std::size_t i = 0; i < l.size(); ++i)
        if (l.label(static_cast<int>(i)) == want) return static_cast<int>(i);
      return -1;
    };
    bool pairs_ok = true;
    std::string pair_detail;
    const auto cover_pairs = l.covers();
    auto is_cover = [&](int a, int b) {
      return std::find(cover_pairs.begin(), cover_pairs.end(), std::make_pair(a, b)) !=
             cover_pairs.end();
    };
    for (const auto& entry : fx.at("cover_pairs")) {
      const auto a = entry.at(0).get<std::string>();
      const auto b = entry.at(1).get<std::string>();
      const int ia = label_index(a), ib = label_index(b);
      if (ia < 0 || ib < 0 || !is_cover(ia, ib)) {
        pairs_ok = false;
        pair_detail += a + " not covered by " + b + "; ";
      }
    }
    add(rep, prefix + "named cover pairs", pairs_ok,
        pairs_ok ? std::to_string(fx.at("cover_pairs").size()) + " pairs verified"
                 : pair_detail);

    bool y_below_x = true;
    int y_pairs = 0;
    std::string y_detail;
    for (std::size_t i = 0; i < fam.nodes.size(); ++i) {
      const auto& node = fam.nodes[i];
      if (node.kind() != variety::VarietyHandle::Kind::family_y) continue;
      for (std::size_t j = 0; j < fam.nodes.size(); ++j) {
        const auto& other = fam.nodes[j];
        if (other.kind() != variety::VarietyHandle::Kind::family_x) continue;
        if (other.m() != node.m() || other.n() != node.n()) continue;
        ++y_pairs;
        if (!is_cover(static_cast<int>(i), static_cast<int>(j))) {
          y_below_x = false;
          y_detail += l.label(static_cast<int>(i)) + " not covered by " +
                      l.label(static_cast<int>(j)) + "; ";
        }
      }
    }
    add(rep, prefix + "Y covered by X when distinct", y_below_x,
        y_below_x ? std::to_string(y_pairs) + " pairs verified" : y_detail);

    const auto shape = lattice::adjoin_top(lattice::direct_product(l, chain2));
    int non_cancellable = 0;
    for (const auto& c : lattice::classify_all(shape))
      if (!c.cancellable) ++non_cancellable;
    add(rep, prefix + "product with 2-chain plus new top all cancellable",
        non_cancellable == 0,
        std::to_string(shape.size()) + " elements, " +
            std::to_string(non_cancellable) + " non-cancellable");
  }
  return rep;
}

// ---------------------------------------------------------------------------
// prop31

SuiteReport prop31_suite(const Options& opt) {
  SuiteReport rep{"prop31", {}};
  const int n = opt.degree;
  if (n != 3 && n != 4)
    fail(errc::invalid_argument, "the witness harness runs at degree 3 or 4");

  using perm::Permutation;
  using perm::Subgroup;
  auto gen = [&](std::string_view cycles) {
    const Permutation p = Permutation::from_cycles(n, cycles);
    return Subgroup::closure(n, std::vector<Permutation>{p});
  };

  Subgroup v = Subgroup::trivial(n), g1 = v, g2 = v;
  if (n == 3) {
    v = gen("(123)");
    g1 = gen("(12)");
    g2 = gen("(13)");
  } else {
    const std::vector<Permutation> vgens{Permutation::from_cycles(4, "(12)"),
                                         Permutation::from_cycles(4, "(34)"),
                                         Permutation::from_cycles(4, "(13)(24)")};
    v = Subgroup::closure(4, vgens);
    g1 = gen("(13)");
    g2 = gen("(24)");
  }

  try {
    const auto w = variety::witness_harness(v, g1, g2, n);
    const std::string who = "V=" + w.v_name + ", G1=" + w.g1_name + ", G2=" + w.g2_name;
    add(rep, "degree " + std::to_string(n) + " witnesses", true, who + "; " + w.detail);
    add(rep, "variety joins coincide", w.joins_coincide, "");
    add(rep, "variety meets coincide", w.meets_coincide, "");
    add(rep, "zero parts equal", w.zero_parts_equal, "");
    add(rep, "varieties differ", w.varieties_differ, "");
    add(rep, "splicing through the join group", w.splicing_ok, "");
  } catch (const Error& e) {
    add(rep, "degree " + std::to_string(n) + " witnesses", false, e.what());
  }
  return rep;
}

// ---------------------------------------------------------------------------
// lemma36

struct DeriveCheck {
  std::string name;
  deduce::Basis basis;
  words::Identity goal;
  bool expect_proved = true;
  std::optional<perm::Permutation> expect_permutation;
};

SuiteReport lemma36_suite(const Options& opt) {
  SuiteReport rep{"lemma36", {}};
  using words::parse_identity;

  deduce::Basis squares;
  squares.identities = {parse_identity("x x y = 0"), parse_identity("x y x = 0"),
                        parse_identity("y x x = 0")};
  deduce::Basis pair2;
  pair2.identities = {parse_identity("x1 x2 = 0")};
  deduce::Basis perm3;
  const auto sym3 = perm::Subgroup::symmetric(3);
  for (const auto& pi : sym3.members())
    if (!pi.is_identity()) perm3.identities.push_back(words::permutation_identity(3, pi));
  deduce::Basis nil3;
  nil3.identities = {parse_identity("x1 x2 x3 = 0")};

  const perm::Permutation swap12(std::vector<int>{2, 1, 3, 4});

  std::vector<DeriveCheck> checks;
  checks.push_back({"(x y)^2 = 0 from the three square patterns", squares,
                    parse_identity("x y x y = 0")});
  checks.push_back({"x^2 y x = 0 from the three square patterns", squares,
                    parse_identity("x x y x = 0")});
  checks.push_back({"x y x^2 = 0 from the three square patterns", squares,
                    parse_identity("x y x x = 0")});
  checks.push_back({"x^2 = 0 from x1 x2 = 0", pair2, parse_identity("x x = 0")});
  checks.push_back({"length-4 swap from the length-3 permutational basis", perm3,
                    words::permutation_identity(4, swap12), true, swap12});
  checks.push_back({"x y = y x stays underivable from x1 x2 x3 = 0", nil3,
                    parse_identity("x y = y x"), false});

  for (auto& c : checks) {
    const auto result = deduce::derive(c.basis, c.goal, opt.depth, opt.size);
    bool pass = result.proved == c.expect_proved;
    std::string detail;
    if (result.proved) {
      detail = std::to_string(result.trace->steps.size()) + " steps";
      if (pass && !deduce::replay(c.basis, *result.trace)) {
        pass = false;
        detail += ", but the trace does not replay";
      }
      if (pass && c.expect_permutation) {
        const auto composed = deduce::trace_permutation(*result.trace);
        if (!composed || !(*composed == *c.expect_permutation)) {
          pass = false;
          detail += ", but the composed step permutation is wrong";
        } else {
          detail += ", composed permutation " + composed->to_cycles();
        }
      }
    } else {
      detail = c.expect_proved ? "not proved within depth " + std::to_string(opt.depth)
                               : "not proved, as required";
    }
    add(rep, c.name, pass, detail);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// incomparability

SuiteReport incomparability_suite(const Options& opt) {
  SuiteReport rep{"incomparability", {}};
  using words::parse_word;

  const std::vector<std::vector<std::string>> triples = {
      {"x x y", "y x x", "x y x"},
      {"x x x y", "y x x x", "x y x y"},
      {"x x y x x", "x y x x x", "x x x y"},
  };
  for (std::size_t t = 0; t < triples.size(); ++t) {
    const auto& triple = triples[t];
    for (std::size_t i = 0; i < triple.size(); ++i) {
      for (std::size_t j = i + 1; j < triple.size(); ++j) {
        const auto u = parse_word(triple[i]);
        const auto v = parse_word(triple[j]);
        add(rep,
            "triple " + std::to_string(t + 1) + ": " + triple[i] + " vs " + triple[j],
            words::incomparable(u, v), "neither embeds in the other");
      }
    }
  }

  std::mt19937_64 rng(opt.seed);
  const std::vector<std::string> alphabet = {"a", "b", "c", "d"};
  int done = 0;
  int violations = 0;
  std::string example;
  while (done < opt.count) {
    const int len = 2 + static_cast<int>(rng() % 9);
    const int k = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(
                                           std::min(3, len - 1)));
    auto roll = [&] {
      for (;;) {
        std::vector<std::string> letters;
        std::set<std::string> used;
        for (int i = 0; i < len; ++i) {
          const auto& l = alphabet[static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(k))];
          letters.push_back(l);
          used.insert(l);
        }
        if (static_cast<int>(used.size()) == k) return words::Word::from_letters(letters);
      }
    };
    const auto u = roll();
    const auto v = roll();
    if (u.flat_letters() == v.flat_letters()) continue;
    if (words::equivalent(u, v)) continue;
    ++done;
    if (!words::incomparable(u, v)) {
      ++violations;
      if (example.empty())
        example = words::render_word(u) + " vs " + words::render_word(v);
    }
  }
  add(rep, "random same-length same-content non-equivalent pairs", violations == 0,
      std::to_string(opt.count) + " pairs with seed " + std::to_string(opt.seed) +
          (violations == 0 ? ", all incomparable" : ", first comparable pair: " + example));
  return rep;
}

// ---------------------------------------------------------------------------
// oracles

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

// Words over k letters with lengths 1..max_len, indexed as base-k numerals so
// the rewrite closure can address them without a hash map.
struct WordUniverse {
  int k = 0;
  int max_len = 0;
  std::vector<std::size_t> offset;  // offset[l] = first index of length l

  explicit WordUniverse(int letters, int len) : k(letters), max_len(len) {
    offset.assign(static_cast<std::size_t>(max_len) + 2, 0);
    std::size_t total = 0, pow = 1;
    for (int l = 1; l <= max_len; ++l) {
      offset[static_cast<std::size_t>(l)] = total;
      pow *= static_cast<std::size_t>(k);
      total += pow;
    }
    offset[static_cast<std::size_t>(max_len) + 1] = total;
  }

  std::size_t size() const { return offset[static_cast<std::size_t>(max_len) + 1]; }

  std::optional<std::size_t> index_of(const std::vector<std::string>& letters) const {
    const int len = static_cast<int>(letters.size());
    if (len < 1 || len > max_len) return std::nullopt;
    std::size_t code = 0;
    for (const auto& name : letters) {
      if (name.size() < 2 || name[0] != 'x') return std::nullopt;
      int ordinal = 0;
      for (std::size_t i = 1; i < name.size(); ++i) {
        if (name[i] < '0' || name[i] > '9') return std::nullopt;
        ordinal = ordinal * 10 + (name[i] - '0');
      }
      if (ordinal < 1 || ordinal > k) return std::nullopt;
      code = code * static_cast<std::size_t>(k) + static_cast<std::size_t>(ordinal - 1);
    }
    return offset[static_cast<std::size_t>(len)] + code;
  }

  std::vector<std::string> letters_of(std::size_t index) const {
    int len = 1;
    while (index >= offset[static_cast<std::size_t>(len) + 1]) ++len;
    std::size_t code = index - offset[static_cast<std::size_t>(len)];
    std::vector<std::string> out(static_cast<std::size_t>(len));
    for (int i = len - 1; i >= 0; --i) {
      out[static_cast<std::size_t>(i)] =
          "x" + std::to_string(code % static_cast<std::size_t>(k) + 1);
      code /= static_cast<std::size_t>(k);
    }
    return out;
  }
};

std::vector<variety::VarietyHandle> oracle_handles() {
  using variety::VarietyHandle;
  std::vector<VarietyHandle> out;
  for (int m = 2; m <= 4; ++m)
    for (int n = m; n <= 4; ++n) {
      out.push_back(VarietyHandle::family_x(m, n));
      if (!(m == 2 && n == 2)) out.push_back(VarietyHandle::family_y(m, n));
    }
  for (int m : {2, 3, 4}) {
    out.push_back(VarietyHandle::family_x(m, variety::kInf));
    out.push_back(VarietyHandle::family_y(m, variety::kInf));
  }
  out.push_back(VarietyHandle::family_x(variety::kInf, variety::kInf));
  out.push_back(VarietyHandle::family_y(variety::kInf, variety::kInf));
  for (const auto& g : perm::all_subgroups(3))
    out.push_back(VarietyHandle::subgroup_derived(g, 3));
  return out;
}

SuiteReport oracles_suite(const Options& opt) {
  SuiteReport rep{"oracles", {}};
  if (opt.letters < 1 || opt.letters > 4)
    fail(errc::invalid_argument, "the oracle suite runs on 1 to 4 letters");
  if (opt.max_len < 1 || opt.max_len > 6)
    fail(errc::invalid_argument, "the oracle suite caps identity length at 6");

  const int k = opt.letters;
  const WordUniverse window(k, opt.max_len);
  const WordUniverse closure(k, opt.max_len + 2);

  std::vector<words::Word> window_words;
  window_words.reserve(window.size());
  for (std::size_t i = 0; i < window.size(); ++i)
    window_words.push_back(words::Word::from_letters(window.letters_of(i)));

  for (const auto& handle : oracle_handles()) {
    const std::string tag = handle.to_string();
    const auto free = variety::free_object(handle, k);

    std::vector<int> value(window.size(), 0);
    std::vector<char> holds_zero(window.size(), 0);
    for (std::size_t i = 0; i < window.size(); ++i) {
      value[i] = free.eval(window_words[i]);
      holds_zero[i] =
          variety::holds(handle, words::Identity::zero(window_words[i])) ? 1 : 0;
    }

    // Free-object agreement on every u = v and u = 0 over the window.
    long mismatches = 0;
    std::string first;
    std::vector<std::vector<char>> holds_pair(
        window.size(), std::vector<char>(window.size(), 0));
    for (std::size_t i = 0; i < window.size(); ++i) {
      if ((holds_zero[i] != 0) != (value[i] == 0)) {
        ++mismatches;
        if (first.empty()) first = words::render_word(window_words[i]) + " = 0";
      }
      for (std::size_t j = i + 1; j < window.size(); ++j) {
        const bool h = variety::holds(
            handle, words::Identity::pair(window_words[i], window_words[j]));
        holds_pair[i][j] = h ? 1 : 0;
        if (h != (value[i] == value[j])) {
          ++mismatches;
          if (first.empty())
            first = words::render_word(window_words[i]) + " = " +
                    words::render_word(window_words[j]);
        }
      }
    }
    const std::size_t identities =
        window.size() * (window.size() - 1) / 2 + window.size();
    add(rep, tag + ": holds agrees with the free object", mismatches == 0,
        mismatches == 0
            ? std::to_string(identities) + " identities"
            : std::to_string(mismatches) + " mismatches, first at " + first);

    // Rewrite reachability closure; the extra two letters of headroom match
    // the default derive bound for goals drawn from the window.
    const auto basis = variety::defining_basis(handle);
    const int zero_node = static_cast<int>(closure.size());
    DisjointSets components(closure.size() + 1);
    for (std::size_t i = 0; i < closure.size(); ++i) {
      const deduce::RWord w{false, closure.letters_of(i)};
      for (const auto& step :
           deduce::one_step_rewrites(w, basis, static_cast<std::size_t>(opt.max_len + 2))) {
        if (step.result.zero) {
          components.unite(static_cast<int>(i), zero_node);
          continue;
        }
        const auto target = closure.index_of(step.result.letters);
        if (target) components.unite(static_cast<int>(i), static_cast<int>(*target));
      }
    }

    long candidates = 0, unsound = 0, unreachable_equal = 0;
    std::string unsound_first, unreachable_first;
    for (std::size_t i = 0; i < window.size(); ++i) {
      const int ci = components.find(
          static_cast<int>(*closure.index_of(window_words[i].flat_letters())));
      // u = 0 identities
      const bool zero_reachable = ci == components.find(zero_node);
      if (holds_zero[i] && !zero_reachable) {
        ++unreachable_equal;
        if (unreachable_first.empty())
          unreachable_first = words::render_word(window_words[i]) + " = 0";
      }
      if (!holds_zero[i] && zero_reachable) {
        ++candidates;
        const auto res = deduce::derive(
            basis, words::Identity::zero(window_words[i]), opt.depth, opt.size);
        if (res.proved) {
          ++unsound;
          if (unsound_first.empty())
            unsound_first = words::render_word(window_words[i]) + " = 0";
        }
      }
      for (std::size_t j = i + 1; j < window.size(); ++j) {
        const int cj = components.find(
            static_cast<int>(*closure.index_of(window_words[j].flat_letters())));
        const bool reachable = ci == cj;
        const bool h = holds_pair[i][j] != 0;
        if (h && !reachable) {
          ++unreachable_equal;
          if (unreachable_first.empty())
            unreachable_first = words::render_word(window_words[i]) + " = " +
                                words::render_word(window_words[j]);
        }
        if (!h && reachable) {
          ++candidates;
          const auto res = deduce::derive(
              basis,
              words::Identity::pair(window_words[i], window_words[j]),
              opt.depth, opt.size);
          if (res.proved) {
            ++unsound;
            if (unsound_first.empty())
              unsound_first = words::render_word(window_words[i]) + " = " +
                              words::render_word(window_words[j]);
          }
        }
      }
    }
    add(rep, tag + ": derive never proves a rejected identity", unsound == 0,
        unsound == 0 ? std::to_string(candidates) + " reachable candidates re-checked"
                     : "derive proved " + unsound_first);
    add(rep, tag + ": accepted identities are rewrite-reachable", unreachable_equal == 0,
        unreachable_equal == 0 ? "every accepted identity joins a common component"
                               : "no rewrite path for " + unreachable_first);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// subgroup figures

int lattice_height(const lattice::FiniteLattice& l) {
  const auto covers = l.covers();
  std::vector<int> h(l.size(), 0);
  for (std::size_t pass = 0; pass < l.size(); ++pass) {
    bool changed = false;
    for (const auto& [lo, hi] : covers) {
      if (h[static_cast<std::size_t>(hi)] < h[static_cast<std::size_t>(lo)] + 1) {
        h[static_cast<std::size_t>(hi)] = h[static_cast<std::size_t>(lo)] + 1;
        changed = true;
      }
    }
    if (!changed) break;
  }
  return *std::max_element(h.begin(), h.end());
}

lattice::FiniteLattice m_k_lattice(int k) {
  std::vector<std::pair<int, int>> covers;
  for (int i = 1; i <= k; ++i) {
    covers.emplace_back(0, i);
    covers.emplace_back(i, k + 1);
  }
  return lattice::FiniteLattice::from_covers(static_cast<std::size_t>(k) + 2, covers);
}

}  // namespace

SuiteReport subgroup_figure(int degree, const Options& opt) {
  if (degree != 3 && degree != 4)
    fail(errc::invalid_argument, "stored expectations exist for degrees 3 and 4");
  SuiteReport rep{"subgroups" + std::to_string(degree), {}};
  const json fx =
      load_fixture(opt, degree == 3 ? "sub_s3_expected.json" : "sub_s4_expected.json");
  const auto sl = grouplat::subgroup_lattice(degree);

  add(rep, "subgroup count",
      sl.nodes.size() == fx.at("count").get<std::size_t>(),
      std::to_string(sl.nodes.size()) + " subgroups");

  std::map<std::string, int> profile;
  for (const auto& g : sl.nodes) ++profile[std::to_string(g.order())];
  const auto expected_profile = fx.at("order_profile").get<std::map<std::string, int>>();
  std::string profile_text;
  for (const auto& [order, count] : profile)
    profile_text += order + ":" + std::to_string(count) + " ";
  add(rep, "order profile", profile == expected_profile, profile_text);

  add(rep, "atom count",
      sl.lattice.atoms().size() == fx.at("atom_count").get<std::size_t>(),
      std::to_string(sl.lattice.atoms().size()) + " atoms");

  add(rep, "height", lattice_height(sl.lattice) == fx.at("height").get<int>(),
      "height " + std::to_string(lattice_height(sl.lattice)));

  auto index_of = [&](const std::string& name) {
    for (std::size_t i = 0; i < sl.names.size(); ++i)
      if (sl.names[i] == name) return static_cast<int>(i);
    return -1;
  };

  bool named_ok = true;
  std::string missing;
  for (const auto& entry : fx.at("named_nodes")) {
    if (index_of(entry.get<std::string>()) < 0) {
      named_ok = false;
      missing += entry.get<std::string>() + " ";
    }
  }
  add(rep, "named nodes present", named_ok,
      named_ok ? std::to_string(fx.at("named_nodes").size()) + " names found"
               : "missing: " + missing);

  bool incl_ok = true;
  std::string incl_detail;
  for (const auto& entry : fx.at("named_inclusions")) {
    const auto a = entry.at(0).get<std::string>();
    const auto b = entry.at(1).get<std::string>();
    const int ia = index_of(a), ib = index_of(b);
    if (ia < 0 || ib < 0 || !sl.lattice.leq(ia, ib)) {
      incl_ok = false;
      incl_detail += a + " not below " + b + "; ";
    }
  }
  add(rep, "named inclusions", incl_ok,
      incl_ok ? std::to_string(fx.at("named_inclusions").size()) + " inclusions verified"
              : incl_detail);

  if (fx.contains("named_non_inclusions")) {
    bool non_ok = true;
    std::string non_detail;
    for (const auto& entry : fx.at("named_non_inclusions")) {
      const auto a = entry.at(0).get<std::string>();
      const auto b = entry.at(1).get<std::string>();
      const int ia = index_of(a), ib = index_of(b);
      if (ia < 0 || ib < 0 || sl.lattice.leq(ia, ib)) {
        non_ok = false;
        non_detail += a + " unexpectedly below " + b + "; ";
      }
    }
    add(rep, "named non-inclusions", non_ok,
        non_ok ? std::to_string(fx.at("named_non_inclusions").size()) +
                     " non-inclusions verified"
               : non_detail);
  }

  std::vector<std::string> cancellable;
  const auto classifications = lattice::classify_all(sl.lattice);
  for (const auto& c : classifications)
    if (c.cancellable) cancellable.push_back(sl.names[static_cast<std::size_t>(c.element)]);
  std::sort(cancellable.begin(), cancellable.end());
  auto expected_cancellable = fx.at("cancellable").get<std::vector<std::string>>();
  std::sort(expected_cancellable.begin(), expected_cancellable.end());
  add(rep, "cancellable set", cancellable == expected_cancellable,
      join_list(cancellable));

  if (fx.contains("shape_m_k")) {
    const int k = fx.at("shape_m_k").get<int>();
    const bool iso = lattice::are_isomorphic(sl.lattice, m_k_lattice(k)).has_value();
    add(rep, "shape", iso, "isomorphic to the height-2 lattice with " +
                               std::to_string(k) + " atoms");
  }

  if (fx.contains("modular_superset")) {
    const std::string lower_name = fx.at("modular_superset").get<std::string>();
    const int lower = index_of(lower_name);
    bool mod_ok = lower >= 0;
    std::string mod_detail;
    for (const auto& c : classifications) {
      if (!mod_ok) break;
      if (!c.modular) continue;
      const auto& g = sl.nodes[static_cast<std::size_t>(c.element)];
      if (g.order() == 1 || g.order() == sl.nodes[static_cast<std::size_t>(
                                              sl.lattice.top())].order())
        continue;
      if (!g.contains(sl.nodes[static_cast<std::size_t>(lower)])) {
        mod_ok = false;
        mod_detail = sl.names[static_cast<std::size_t>(c.element)] +
                     " is modular but does not contain " + lower_name;
      }
    }
    add(rep, "proper modular elements contain " + lower_name, mod_ok, mod_detail);
  }

  return rep;
}

SuiteReport run_suite(std::string_view suite, const Options& options) {
  if (suite == "figure1") return figure1_suite(options);
  if (suite == "prop31") return prop31_suite(options);
  if (suite == "lemma36") return lemma36_suite(options);
  if (suite == "incomparability") return incomparability_suite(options);
  if (suite == "oracles") return oracles_suite(options);
  fail(errc::invalid_argument, "unknown suite: " + std::string(suite));
}

}  // namespace varlat::verify

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "varlat/grouplat.hpp"
#include "varlat/lattice.hpp"
#include "varlat/perm.hpp"
#include "varlat/variety.hpp"
#include "varlat/verify.hpp"
#include "varlat/words.hpp"

namespace {

namespace lat = varlat::lattice;
namespace perm = varlat::perm;
namespace variety = varlat::variety;
namespace verify = varlat::verify;
namespace words = varlat::words;

lat::FiniteLattice chain(int length) {
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i + 1 < length; ++i) covers.emplace_back(i, i + 1);
  return lat::FiniteLattice::from_covers(static_cast<std::size_t>(length), covers);
}

lat::FiniteLattice pentagon() {
  const std::vector<std::pair<int, int>> covers{{0, 1}, {1, 3}, {3, 4}, {0, 2}, {2, 4}};
  return lat::FiniteLattice::from_covers(5, covers);
}

lat::FiniteLattice diamond() {
  const std::vector<std::pair<int, int>> covers{{0, 1}, {0, 2}, {0, 3},
                                                {1, 4}, {2, 4}, {3, 4}};
  return lat::FiniteLattice::from_covers(5, covers);
}

lat::FiniteLattice cube(int dims) {
  auto out = chain(2);
  for (int i = 1; i < dims; ++i) out = lat::direct_product(out, chain(2));
  return out;
}

std::string failing_checks(const verify::SuiteReport& rep) {
  std::string out;
  for (const auto& c : rep.checks) {
    if (c.pass) continue;
    if (!out.empty()) out += "; ";
    out += c.name;
    if (!c.detail.empty()) out += ": " + c.detail;
  }
  return out;
}

int count_implication_violations(const lat::FiniteLattice& l, std::string& detail) {
  int violations = 0;
  for (const auto& c : lat::classify_all(l)) {
    const bool chain_ok = (!c.standard || c.cancellable) && (!c.cancellable || c.modular);
    const bool neutral_ok = !c.neutral || (c.standard && c.distributive);
    if (chain_ok && neutral_ok) continue;
    ++violations;
    if (detail.size() < 200)
      detail += "element " + std::to_string(c.element) + " of a lattice of size " +
                std::to_string(l.size()) + " breaks the implication chain; ";
  }
  return violations;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string fixtures = argc > 1 ? argv[1] : "fixtures";
  int failures = 0;

  const auto run = [&](int number, const char* name, double budget_seconds,
                       const std::function<bool(std::string&)>& body) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool pass = false;
    try {
      pass = body(detail);
    } catch (const std::exception& e) {
      pass = false;
      detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (pass && budget_seconds > 0.0 && elapsed > budget_seconds) {
      pass = false;
      char buffer[96];
      std::snprintf(buffer, sizeof(buffer), "exceeded the %.0fs budget", budget_seconds);
      detail = detail.empty() ? buffer : detail + "; " + buffer;
    }
    std::printf("[%s] criterion %2d: %s (%.2fs)\n", pass ? "PASS" : "FAIL", number, name,
                elapsed);
    if (!pass) {
      ++failures;
      if (!detail.empty()) std::printf("        %s\n", detail.c_str());
    }
    std::fflush(stdout);
  };

  verify::Options base;
  base.fixtures_dir = fixtures;

  run(1, "stored expectations for the subgroup lattice of S_3", 1.0,
      [&](std::string& detail) {
        const auto rep = verify::subgroup_figure(3, base);
        detail = failing_checks(rep);
        return rep.ok();
      });

  run(2, "stored expectations for the subgroup lattice of S_4", 5.0,
      [&](std::string& detail) {
        const auto rep = verify::subgroup_figure(4, base);
        detail = failing_checks(rep);
        return rep.ok();
      });

  run(3, "cancellable and modular members of the subgroup lattice of S_5", 60.0,
      [&](std::string& detail) {
        const auto sl = varlat::grouplat::subgroup_lattice(5);
        const auto rows = lat::classify_all(sl.lattice);
        const auto a5 = perm::Subgroup::alternating(5);
        const int full = perm::Subgroup::symmetric(5).order();

        std::set<std::string> cancellable;
        bool modular_ok = true;
        bool a5_modular = false;
        for (const auto& c : rows) {
          const auto& g = sl.nodes[static_cast<std::size_t>(c.element)];
          const auto& name = sl.names[static_cast<std::size_t>(c.element)];
          if (c.cancellable) cancellable.insert(name);
          if (g.order() == a5.order() && g.contains(a5)) a5_modular = c.modular;
          if (c.modular && g.order() > 1 && g.order() < full && !g.contains(a5)) {
            modular_ok = false;
            if (detail.size() < 200)
              detail += "modular proper subgroup " + name + " does not contain A5; ";
          }
        }
        if (cancellable != std::set<std::string>{"T", "S5"})
          detail += "cancellable set is not exactly {T, S5}; ";
        if (!a5_modular) detail += "A5 is not modular; ";
        return modular_ok && a5_modular && cancellable == std::set<std::string>{"T", "S5"};
      });

  run(4, "class implications on fixture and random lattices", 0.0,
      [&](std::string& detail) {
        std::vector<lat::FiniteLattice> samples;
        for (int len = 2; len <= 6; ++len) samples.push_back(chain(len));
        samples.push_back(pentagon());
        samples.push_back(diamond());
        samples.push_back(cube(2));
        samples.push_back(cube(3));
        for (int degree = 2; degree <= 5; ++degree)
          samples.push_back(varlat::grouplat::subgroup_lattice(degree).lattice);

        int violations = 0;
        for (const auto& l : samples) violations += count_implication_violations(l, detail);

        std::mt19937_64 rng(1729);
        for (int i = 0; i < 1000; ++i) {
          const auto l = lat::random_lattice(rng, 9);
          violations += count_implication_violations(l, detail);
        }
        if (violations > 0)
          detail += std::to_string(violations) + " violations in total";
        return violations == 0;
      });

  run(5, "family lattice figure at cap 6", 10.0, [&](std::string& detail) {
    auto opt = base;
    opt.cap = 6;
    const auto rep = verify::run_suite("figure1", opt);
    detail = failing_checks(rep);
    return rep.ok();
  });

  run(6, "normal forms agree with bounded deduction", 120.0, [&](std::string& detail) {
    auto opt = base;
    opt.max_len = 4;
    opt.letters = 3;
    opt.depth = 8;
    const auto rep = verify::run_suite("oracles", opt);
    detail = failing_checks(rep);
    return rep.ok();
  });

  run(7, "permutation groups of the supported varieties", 0.0, [&](std::string& detail) {
    int mismatches = 0;
    for (int m = 2; m <= 5; ++m)
      for (int n = m; n <= 5; ++n)
        for (const bool square : {false, true}) {
          if (square && m == 2 && n == 2) continue;
          const auto h = square ? variety::VarietyHandle::family_y(m, n)
                                : variety::VarietyHandle::family_x(m, n);
          for (int k = 1; k <= 5; ++k) {
            const auto expected =
                k < m ? perm::Subgroup::trivial(k) : perm::Subgroup::symmetric(k);
            if (!(variety::perm_group(h, k) == expected)) {
              ++mismatches;
              if (detail.size() < 200)
                detail += h.to_string() + " at k=" + std::to_string(k) + "; ";
            }
          }
        }
    for (const int degree : {3, 4})
      for (const auto& g : perm::all_subgroups(degree)) {
        const auto h = variety::VarietyHandle::subgroup_derived(g, degree);
        if (!(variety::perm_group(h, degree) == g)) {
          ++mismatches;
          if (detail.size() < 200) detail += h.to_string() + " not recovered; ";
        }
      }
    return mismatches == 0;
  });

  run(8, "join and meet witnesses among subgroup-derived varieties", 60.0,
      [&](std::string& detail) {
        auto opt = base;
        opt.degree = 3;
        const auto r3 = verify::run_suite("prop31", opt);
        opt.degree = 4;
        const auto r4 = verify::run_suite("prop31", opt);
        detail = failing_checks(r3);
        const auto more = failing_checks(r4);
        if (!more.empty()) detail += (detail.empty() ? "" : "; ") + more;
        return r3.ok() && r4.ok();
      });

  run(9, "pattern incomparability properties", 0.0, [&](std::string& detail) {
    auto opt = base;
    opt.seed = 1729;
    opt.count = 5000;
    const auto rep = verify::run_suite("incomparability", opt);
    detail = failing_checks(rep);
    return rep.ok();
  });

  run(10, "bounded derivations with replayable traces", 10.0, [&](std::string& detail) {
    const auto rep = verify::run_suite("lemma36", base);
    detail = failing_checks(rep);
    return rep.ok();
  });

  run(11, "one-letter unary normal forms", 0.0, [&](std::string& detail) {
    using variety::UnaryNormalForm;
    const auto nf = [](const char* text) {
      return variety::normalize_one_letter(words::parse_word(text));
    };
    if (!(nf("~(x)") == UnaryNormalForm{0, 1})) detail += "~(x); ";
    if (!(nf("x ~(x)") == UnaryNormalForm{1, 1})) detail += "x ~(x); ";
    if (!(nf("~(~(x))") == UnaryNormalForm{2, 1})) detail += "~(~(x)); ";
    if (!detail.empty()) return false;

    std::mt19937_64 rng(1729);
    const auto x = words::Word::letter("x");
    for (int i = 0; i < 200; ++i) {
      auto w = x;
      const int ops = static_cast<int>(rng() % 8);
      for (int j = 0; j < ops; ++j) {
        switch (rng() % 3) {
          case 0: w = words::Word::bar(w); break;
          case 1: w = words::Word::concat(w, x); break;
          default: w = words::Word::concat(x, w); break;
        }
      }
      if (w.is_semigroup_word()) w = words::Word::bar(w);
      const auto first = variety::normalize_one_letter(w);
      const auto again =
          variety::normalize_one_letter(variety::unary_normal_form_word(first, "x"));
      if (!(first == again)) {
        detail = "normal form of " + words::render_word(w) + " is not idempotent";
        return false;
      }
    }
    return true;
  });

  std::printf("%d of 11 criteria passed\n", 11 - failures);
  return failures;
}

// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "oracles.hpp"
#include "zdgraph/error.hpp"
#include "zdgraph/ideals.hpp"
#include "zdgraph/theorems.hpp"

using namespace zdg;
namespace fs = std::filesystem;

namespace {

  struct Outcome {
    bool        ok = true;
    std::string detail;
  };

  int failures = 0;

  void criterion(int n, std::function<Outcome()> const& body) {
    auto    t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = body();
    } catch (std::exception const& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.ok) {
      ++failures;
    }
    std::printf("criterion %d: %s  %s  (%.2f s)\n", n, o.ok ? "PASS" : "FAIL",
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }

  double since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }

  std::vector<FiniteRing> small_family() {
    std::vector<FiniteRing> out;
    for (std::size_t n = 2; n <= 16; ++n) {
      out.push_back(make_cyclic_ring(n));
    }
    auto z2 = make_cyclic_ring(2);
    out.push_back(make_product_ring(z2, z2));
    out.push_back(make_product_ring(z2, make_cyclic_ring(4)));
    out.push_back(make_product_ring(make_product_ring(z2, z2), z2));
    out.push_back(make_matrix_ring(z2, 2));
    return out;
  }

  // Family of criterion 1, Z_n up to 60, Z3 x Z3, M2(Z2) and M2(Z3).
  std::vector<FiniteRing> test_rings() {
    std::vector<FiniteRing> out = small_family();
    for (std::size_t n = 17; n <= 60; ++n) {
      out.push_back(make_cyclic_ring(n));
    }
    out.push_back(make_product_ring(make_cyclic_ring(3), make_cyclic_ring(3)));
    out.push_back(make_matrix_ring(make_cyclic_ring(3), 2));
    return out;
  }

  struct Instance {
    std::string             name;
    FiniteSemigroupWithZero s;
  };

  std::vector<Instance> semigroup_corpus(double* order4_secs) {
    std::vector<Instance> out;
    for (auto const& r : test_rings()) {
      out.push_back({"IPO(" + r.name() + ")", build_ipo(r)});
    }
    for (std::size_t m = 2; m <= 4; ++m) {
      auto t0  = std::chrono::steady_clock::now();
      auto all = enumerate_semigroups_with_zero(m);
      if (m == 4 && order4_secs) {
        *order4_secs = since(t0);
      }
      for (std::size_t i = 0; i < all.size(); ++i) {
        out.push_back({"S" + std::to_string(m) + "#" + std::to_string(i), std::move(all[i])});
      }
    }
    return out;
  }

  std::string first_failure(std::string const& instance, CheckResult const& c) {
    return instance + " " + c.name + " " + c.witness.dump();
  }

  std::string slurp(fs::path const& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
  }

}  // namespace

int main() {
  double order4_secs = 0;

  criterion(1, [] {
    std::size_t rings = 0;
    for (auto const& r : small_family()) {
      for (bool left : {true, false}) {
        std::set<oracle::Set> got;
        for (auto const& i : enumerate_one_sided_ideals(r, left ? Side::left : Side::right)) {
          got.insert(i.set.elements());
        }
        if (got != oracle::subset_scan_ideals(r, left)) {
          return Outcome{false, r.name() + (left ? " left" : " right") + " ideals differ"};
        }
      }
      ++rings;
    }
    return Outcome{true, std::to_string(rings) + " rings, left and right ideals match subset scan"};
  });

  criterion(2, [] {
    std::size_t rings = 0;
    for (auto const& r : test_rings()) {
      auto c = check_ipo_closure(r);
      if (c.status != CheckStatus::pass) {
        return Outcome{false, first_failure(r.name(), c)};
      }
      ++rings;
    }
    return Outcome{true, std::to_string(rings) + " rings, IPO closed under the ideal product"};
  });

  auto corpus = semigroup_corpus(&order4_secs);

  criterion(3, [&] {
    std::size_t connected = 0;
    for (auto const& [name, s] : corpus) {
      auto c = check_directed_connectivity_iff(s);
      if (c.status != CheckStatus::pass) {
        return Outcome{false, first_failure(name, c)};
      }
      // restate the claim from the raw graph
      auto g    = directed_zd_graph(s);
      auto ann  = ann_sets(s);
      auto conn = directed_connectivity(g);
      if (conn.connected != (ann.a_left == ann.a_right)
          || (conn.connected && conn.diameter.rank_compare(Distance::finite(3)) > 0)) {
        return Outcome{false, name + " directed connectivity disagrees"};
      }
      connected += conn.connected;
    }
    std::ostringstream d;
    d << corpus.size() << " semigroups (" << connected
      << " directed-connected), order-4 sweep " << order4_secs << " s";
    return Outcome{order4_secs < 300, d.str()};
  });

  criterion(4, [&] {
    std::size_t cyclic = 0;
    for (auto const& [name, s] : corpus) {
      for (auto const& c : {check_undirected_connectivity(s), check_girth_bound(s)}) {
        if (c.status != CheckStatus::pass) {
          return Outcome{false, first_failure(name, c)};
        }
      }
      auto g = directed_zd_graph(s);
      auto d = undirected_diameter(g);
      auto r = girth(g);
      if (d.rank_compare(Distance::finite(3)) > 0
          || !(r.is_infinite() || r == Distance::finite(3) || r == Distance::finite(4))) {
        return Outcome{false, name + " undirected bounds violated"};
      }
      cyclic += !r.is_infinite();
    }
    return Outcome{true, std::to_string(corpus.size()) + " semigroups connected with diameter <= 3, "
                             + std::to_string(cyclic) + " with a cycle, girth in {3,4}"};
  });

  criterion(5, [] {
    std::size_t rings = 0;
    for (auto const& r : test_rings()) {
      if (!r.is_commutative()) {
        continue;
      }
      auto c = check_duo_ann_sets(r);
      if (c.status != CheckStatus::pass) {
        return Outcome{false, first_failure(r.name(), c)};
      }
      ++rings;
    }
    return Outcome{true, std::to_string(rings) + " commutative rings with A^l = A^r = IPO \\ {0, R}"};
  });

  criterion(6, [] {
    std::vector<FiniteRing> rings;
    for (std::size_t n = 2; n <= 30; ++n) {
      rings.push_back(make_cyclic_ring(n));
    }
    auto z2 = make_cyclic_ring(2);
    rings.push_back(make_product_ring(z2, z2));
    rings.push_back(make_product_ring(z2, make_cyclic_ring(4)));
    rings.push_back(make_product_ring(make_cyclic_ring(3), make_cyclic_ring(3)));
    rings.push_back(make_product_ring(make_product_ring(z2, z2), z2));
    rings.push_back(make_matrix_ring(z2, 2));
    std::map<std::string, Json> seen;
    std::size_t                 complete = 0;
    for (auto const& r : rings) {
      auto c = classify_completeness(r);
      if (c.status != CheckStatus::pass) {
        return Outcome{false, first_failure(r.name(), c)};
      }
      seen[r.name()] = c.witness;
      complete += c.witness["complete"].get<bool>();
    }
    auto has = [&](std::string const& n, std::string const& b) {
      for (auto const& x : seen[n]["branches"]) {
        if (x == b) {
          return true;
        }
      }
      return false;
    };
    for (char const* n : {"Z4", "Z6", "Z8", "Z9"}) {
      if (!seen[n]["complete"].get<bool>()) {
        return Outcome{false, std::string(n) + " not complete"};
      }
    }
    if (!has("Z6", "ii") || !has("Z8", "iii")) {
      return Outcome{false, "Z6 or Z8 on the wrong branch"};
    }
    std::ostringstream d;
    d << rings.size() << " rings agree, " << complete << " complete; Z6 " << seen["Z6"]["branches"].dump()
      << ", Z8 " << seen["Z8"]["branches"].dump() << ", Z12 complete=" << seen["Z12"]["complete"]
      << ", Z16 complete=" << seen["Z16"]["complete"];
    return Outcome{true, d.str()};
  });

  criterion(7, [] {
    std::ostringstream d;
    bool               ok = true;
    auto one = [&](std::size_t n, double limit) {
      auto t0 = std::chrono::steady_clock::now();
      auto m  = analyze_matrix(make_cyclic_ring(n), 2);
      auto lo = check_matrix_diam_lower(m);
      auto mo = check_matrix_diam_monotone(m);
      auto gr = check_matrix_girth(m);
      double secs = since(t0);
      bool   good = lo.status == CheckStatus::pass && mo.status == CheckStatus::pass
                  && gr.status == CheckStatus::pass && secs < limit;
      ok = ok && good;
      d << "M2(Z" << n << ") ipo " << m.ipo.size() << " diam " << mo.witness["matrix_diameter"]
        << " base " << mo.witness["base_diameter"] << " girth " << gr.witness["girth"] << " "
        << (good ? "ok" : "BAD") << " " << secs << " s; ";
      return mo;
    };
    for (std::size_t n : {2, 4, 3, 6}) {
      one(n, 60);
    }
#if ZDGRAPH_STRETCH
    auto mo = one(12, 600);
    if (mo.witness["ag_diameter"] != 3 || mo.witness["matrix_diameter"] != 3) {
      ok = false;
      d << "stretch diameters wrong";
    }
#else
    d << "stretch M2(Z12) disabled";
#endif
    return Outcome{ok, d.str()};
  });

  criterion(8, [&] {
    std::size_t pairs = 0;
    for (auto const& [name, s] : corpus) {
      for (auto mode : {PathMode::directed, PathMode::undirected}) {
        auto c = check_constructive_paths(s, mode);
        if (c.failed()) {
          return Outcome{false, first_failure(name, c)};
        }
        if (c.status == CheckStatus::pass) {
          pairs += c.witness["pairs"].get<std::size_t>();
        }
      }
    }
    return Outcome{true, std::to_string(pairs)
                             + " ordered pairs, every path valid, length <= 3 and >= BFS distance"};
  });

  criterion(9, [] {
    std::size_t applicable = 0;
    std::string names;
    for (auto const& r : test_rings()) {
      auto c = check_not_tournament(r);
      if (c.failed()) {
        return Outcome{false, first_failure(r.name(), c)};
      }
      if (c.status == CheckStatus::pass) {
        if (is_tournament(directed_zd_graph(build_ipo(r)))) {
          return Outcome{false, r.name() + " is a tournament"};
        }
        ++applicable;
        if (applicable <= 5) {
          names += r.name() + " ";
        }
      }
    }
    return Outcome{applicable > 0, std::to_string(applicable)
                                       + " rings meet both hypotheses, none a tournament (" + names
                                       + "...)"};
  });

  criterion(10, [] {
    auto dir = fs::temp_directory_path() / "zdgraph_acceptance";
    fs::create_directories(dir);
    std::string const cli = ZDGRAPH_CLI_PATH;
    std::size_t       compared = 0;
    for (std::string expr : {"Z12", "Z2 x Z2 x Z2", "M2(Z2)", "Z5"}) {
      for (char const* mode : {"directed", "undirected"}) {
        std::string out[2];
        std::string dot[2];
        for (int run = 0; run < 2; ++run) {
          auto j = dir / ("r" + std::to_string(run) + ".json");
          auto g = dir / ("r" + std::to_string(run) + ".dot");
          std::string cmd = "\"" + cli + "\" analyze \"" + expr + "\" --json \"" + j.string()
                            + "\" --dot \"" + g.string() + "\" --dot-mode " + mode;
          if (std::system(cmd.c_str()) != 0) {
            return Outcome{false, "non-zero exit for " + expr};
          }
          out[run] = slurp(j);
          dot[run] = slurp(g);
        }
        if (out[0].empty() || out[0] != out[1] || dot[0] != dot[1]) {
          return Outcome{false, expr + " output differs between runs"};
        }
        ++compared;
      }
    }
    return Outcome{true, std::to_string(compared) + " run pairs byte-identical (JSON and DOT)"};
  });

  std::printf("%s\n", failures == 0 ? "all criteria pass" : "some criteria FAILED");
  return failures == 0 ? 0 : 1;
}

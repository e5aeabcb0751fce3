#include <map>

#include "doctest.h"
#include "oracles.hpp"
#include "zdgraph/error.hpp"
#include "zdgraph/theorems.hpp"

using namespace zdg;
using oracle::Set;

namespace {

  std::vector<FiniteRing> ring_corpus() {
    std::vector<FiniteRing> out;
    for (std::size_t n = 2; n <= 36; ++n) {
      out.push_back(make_cyclic_ring(n));
    }
    auto z2 = make_cyclic_ring(2);
    out.push_back(make_product_ring(z2, z2));
    out.push_back(make_product_ring(z2, make_cyclic_ring(4)));
    out.push_back(make_product_ring(make_cyclic_ring(3), make_cyclic_ring(3)));
    out.push_back(make_product_ring(make_product_ring(z2, z2), z2));
    out.push_back(make_matrix_ring(z2, 2));
    out.push_back(make_matrix_ring(make_cyclic_ring(3), 2));
    return out;
  }

  Element by_label(FiniteSemigroupWithZero const& s, Set const& set) {
    for (Element a = 0; a < s.order(); ++a) {
      if (s.label_sets()[a].elements() == set) {
        return a;
      }
    }
    FAIL("no such element");
    return 0;
  }

  std::map<std::size_t, std::size_t> factor(std::size_t n) {
    std::map<std::size_t, std::size_t> f;
    for (std::size_t p = 2; p * p <= n; ++p) {
      while (n % p == 0) {
        ++f[p];
        n /= p;
      }
    }
    if (n > 1) {
      ++f[n];
    }
    return f;
  }

  // Branches of the completeness trichotomy for Z_n from its factorisation.
  std::vector<std::string> expected_branches(std::size_t n) {
    auto                     f = factor(n);
    std::vector<std::string> out;
    bool prime_power = f.size() == 1;
    std::size_t e    = prime_power ? f.begin()->second : 0;
    if (prime_power && e <= 2) {
      out.push_back("i");
    }
    if (f.size() == 2 && f.begin()->second == 1 && std::next(f.begin())->second == 1) {
      out.push_back("ii");
    }
    if (prime_power && e <= 3) {
      out.push_back("iii");
    }
    return out;
  }

  std::vector<std::string> branches_of(CheckResult const& c) {
    std::vector<std::string> out;
    for (auto const& b : c.witness["branches"]) {
      out.push_back(b.get<std::string>());
    }
    return out;
  }

  // Completeness of the undirected IPO graph from naive ideal products.
  bool naive_complete(FiniteRing const& r) {
    auto left  = oracle::subset_scan_ideals(r, true);
    auto right = oracle::subset_scan_ideals(r, false);
    std::set<Set> ideals(left.begin(), left.end());
    ideals.insert(right.begin(), right.end());
    std::set<Set> ipo;
    for (auto const& a : ideals) {
      for (auto const& b : ideals) {
        ipo.insert(oracle::naive_product(r, a, b));
      }
    }
    Set const      zero{0};
    auto           prod = [&](Set const& a, Set const& b) {
      return oracle::naive_product(r, a, b) == zero;
    };
    std::vector<Set> verts;
    for (auto const& a : ipo) {
      if (a == zero) {
        continue;
      }
      bool zd = false;
      for (auto const& b : ipo) {
        zd = zd || (b != zero && (prod(a, b) || prod(b, a)));
      }
      if (zd) {
        verts.push_back(a);
      }
    }
    for (std::size_t i = 0; i < verts.size(); ++i) {
      for (std::size_t j = i + 1; j < verts.size(); ++j) {
        if (!prod(verts[i], verts[j]) && !prod(verts[j], verts[i])) {
          return false;
        }
      }
    }
    return true;
  }

  void check_path(FiniteSemigroupWithZero const& s, std::vector<Element> const& p,
                  Element a, Element b, PathMode mode,
                  std::vector<std::vector<std::size_t>> const& dist, ZdGraph const& g) {
    REQUIRE(p.size() >= 2);
    CHECK(p.front() == a);
    CHECK(p.back() == b);
    CHECK(p.size() - 1 <= 3);
    std::set<Element> distinct(p.begin(), p.end());
    CHECK(distinct.size() == p.size());
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      CHECK(g.position(p[i]).has_value());
      bool step = s.product(p[i], p[i + 1]) == 0
                  || (mode == PathMode::undirected && s.product(p[i + 1], p[i]) == 0);
      CHECK(step);
    }
    CHECK(dist[*g.position(a)][*g.position(b)] <= p.size() - 1);
  }

}  // namespace

TEST_CASE("directed connectivity check") {
  auto z12 = check_directed_connectivity_iff(build_ipo(make_cyclic_ring(12)));
  CHECK(z12.status == CheckStatus::pass);
  CHECK(z12.name == "directed_connectivity_iff");
  CHECK(z12.witness["connected"] == true);
  CHECK(z12.witness["diameter"] == 3);

  auto z5 = check_directed_connectivity_iff(build_ipo(make_cyclic_ring(5)));
  CHECK(z5.status == CheckStatus::pass);
  CHECK(z5.witness["diameter"].is_null());

  auto m = check_directed_connectivity_iff(build_ipo(make_matrix_ring(make_cyclic_ring(2), 2)));
  CHECK(m.status == CheckStatus::pass);
  CHECK(m.witness["connected"] == false);
  CHECK(m.witness["a_left_equals_a_right"] == false);
  CHECK(m.witness.contains("one_sided"));
  CHECK(m.witness.contains("unreachable"));

  CHECK(to_string(CheckStatus::not_applicable) == "not-applicable");
}

TEST_CASE("undirected and girth checks") {
  auto z12 = build_ipo(make_cyclic_ring(12));
  CHECK(check_undirected_connectivity(z12).status == CheckStatus::pass);
  auto g = check_girth_bound(z12);
  CHECK(g.status == CheckStatus::pass);
  CHECK(g.witness["girth"] == "inf");

  auto z2 = make_cyclic_ring(2);
  auto z222 = check_girth_bound(build_ipo(make_product_ring(make_product_ring(z2, z2), z2)));
  CHECK(z222.status == CheckStatus::pass);
  CHECK(z222.witness["girth"] == 3);
  CHECK(z222.witness["cycle"].size() == 3);

  CHECK(check_undirected_connectivity(build_ipo(make_cyclic_ring(7))).status
        == CheckStatus::pass);
  for (std::size_t n = 4; n <= 60; ++n) {
    if (factor(n).size() == 1 && factor(n).begin()->second == 1) {
      continue;
    }
    auto s = build_ipo(make_cyclic_ring(n));
    CHECK(check_undirected_connectivity(s).status == CheckStatus::pass);
    CHECK(check_girth_bound(s).status == CheckStatus::pass);
  }
}

TEST_CASE("constructive paths") {
  auto s   = build_ipo(make_cyclic_ring(12));
  auto two = by_label(s, {0, 2, 4, 6, 8, 10});
  auto thr = by_label(s, {0, 3, 6, 9});
  auto fou = by_label(s, {0, 4, 8});
  auto six = by_label(s, {0, 6});
  CHECK(constructive_path(s, two, thr, PathMode::directed)
        == std::vector<Element>{two, six, fou, thr});
  CHECK(constructive_path(s, two, six, PathMode::directed) == std::vector<Element>{two, six});
  CHECK(constructive_path(s, six, two, PathMode::undirected)
        == std::vector<Element>{six, two});

  CHECK_THROWS_AS(constructive_path(s, two, two, PathMode::undirected), InvalidArgument);
  Element whole = static_cast<Element>(s.order() - 1);
  CHECK_THROWS_AS(constructive_path(s, two, whole, PathMode::undirected), InvalidArgument);

  auto m = build_ipo(make_matrix_ring(make_cyclic_ring(2), 2));
  auto ann = ann_sets(m);
  REQUIRE(ann.a_left != ann.a_right);
  Element a = static_cast<Element>(ann.d_star.first());
  Element b = static_cast<Element>(ann.d_star.next(a));
  CHECK_THROWS_AS(constructive_path(m, a, b, PathMode::directed), HypothesisError);
  CHECK(check_constructive_paths(m, PathMode::directed).status == CheckStatus::not_applicable);
  CHECK(check_constructive_paths(m, PathMode::undirected).status == CheckStatus::pass);

  auto c = check_constructive_paths(s, PathMode::directed);
  CHECK(c.status == CheckStatus::pass);
  CHECK(c.name == "directed_paths");
  CHECK(c.witness["pairs"] == 12);
  CHECK(c.witness["max_length"] == 3);
}

TEST_CASE("constructive paths are valid and no shorter than BFS") {
  std::vector<FiniteSemigroupWithZero> corpus;
  for (auto const& r : ring_corpus()) {
    corpus.push_back(build_ipo(r));
  }
  for (std::size_t m = 2; m <= 4; ++m) {
    for (auto& s : enumerate_semigroups_with_zero(m)) {
      corpus.push_back(std::move(s));
    }
  }
  for (auto const& s : corpus) {
    auto        g = directed_zd_graph(s);
    PathBuilder pb(s);
    auto        dd = oracle::floyd_warshall(g.directed());
    auto        du = oracle::floyd_warshall(g.undirected());
    bool        directed_ok = ann_sets(s).a_left == ann_sets(s).a_right;
    for (Element a : g.vertices()) {
      for (Element b : g.vertices()) {
        if (a == b) {
          continue;
        }
        check_path(s, pb.path(a, b, PathMode::undirected), a, b, PathMode::undirected, du, g);
        if (directed_ok) {
          check_path(s, pb.path(a, b, PathMode::directed), a, b, PathMode::directed, dd, g);
        }
      }
    }
  }
}

TEST_CASE("semigroup checks pass exhaustively") {
  for (std::size_t m = 2; m <= 4; ++m) {
    for (auto const& s : enumerate_semigroups_with_zero(m)) {
      auto checks = run_semigroup_checks(s);
      REQUIRE(checks.size() == 5);
      for (auto const& c : checks) {
        CAPTURE(c.name);
        CAPTURE(c.witness.dump());
        CHECK_FALSE(c.failed());
      }
    }
  }
}

TEST_CASE("Duo annihilator sets") {
  auto z12 = check_duo_ann_sets(make_cyclic_ring(12));
  CHECK(z12.status == CheckStatus::pass);
  CHECK(z12.witness["a_left"].size() == 4);

  auto z2  = make_cyclic_ring(2);
  auto z22 = check_duo_ann_sets(make_product_ring(z2, z2));
  CHECK(z22.status == CheckStatus::pass);
  std::set<std::string> al;
  for (auto const& x : z22.witness["a_left"]) {
    al.insert(x.get<std::string>());
  }
  CHECK(al == std::set<std::string>{"{0,1}", "{0,2}"});
  CHECK(z22.witness["a_right"] == z22.witness["a_left"]);

  auto m = check_duo_ann_sets(make_matrix_ring(z2, 2));
  CHECK(m.status == CheckStatus::not_applicable);
  CHECK(m.witness.contains("hypothesis"));

  for (auto const& r : ring_corpus()) {
    if (r.is_commutative()) {
      CHECK(check_duo_ann_sets(r).status == CheckStatus::pass);
    }
  }
}

TEST_CASE("not a tournament") {
  auto z6 = check_not_tournament(make_cyclic_ring(6));
  CHECK(z6.status == CheckStatus::pass);
  CHECK(z6.witness["arcs"] == "both");
  CHECK(check_not_tournament(make_cyclic_ring(4)).status == CheckStatus::not_applicable);
  CHECK(check_not_tournament(make_cyclic_ring(5)).status == CheckStatus::not_applicable);
  for (auto const& r : ring_corpus()) {
    auto c = check_not_tournament(r);
    CHECK_FALSE(c.failed());
    if (c.status == CheckStatus::pass) {
      CHECK_FALSE(is_tournament(directed_zd_graph(build_ipo(r))));
    }
  }
}

TEST_CASE("completeness classification") {
  auto z6 = classify_completeness(make_cyclic_ring(6));
  CHECK(z6.status == CheckStatus::pass);
  CHECK(z6.witness["complete"] == true);
  CHECK(branches_of(z6) == std::vector<std::string>{"ii"});

  auto z8 = classify_completeness(make_cyclic_ring(8));
  CHECK(z8.witness["complete"] == true);
  CHECK(branches_of(z8) == std::vector<std::string>{"iii"});
  CHECK(z8.witness["maximal_ideal"] == "{0,2,4,6}");
  CHECK(z8.witness["maximal_ideal_squared"] == "{0,4}");

  auto z12 = classify_completeness(make_cyclic_ring(12));
  CHECK(z12.status == CheckStatus::pass);
  CHECK(z12.witness["complete"] == false);
  CHECK(branches_of(z12).empty());

  auto z4 = classify_completeness(make_cyclic_ring(4));
  CHECK(branches_of(z4) == std::vector<std::string>{"i", "iii"});

  CHECK(classify_completeness(make_cyclic_ring(1)).status == CheckStatus::not_applicable);

  for (std::size_t n = 2; n <= 30; ++n) {
    CAPTURE(n);
    auto r = make_cyclic_ring(n);
    auto c = classify_completeness(r);
    CHECK(c.status == CheckStatus::pass);
    CHECK(branches_of(c) == expected_branches(n));
    if (n <= 16) {
      CHECK(c.witness["complete"] == naive_complete(r));
    }
  }
  auto z2 = make_cyclic_ring(2);
  for (auto const& r : {make_product_ring(z2, z2), make_product_ring(z2, make_cyclic_ring(4)),
                        make_product_ring(make_cyclic_ring(3), make_cyclic_ring(3)),
                        make_product_ring(make_product_ring(z2, z2), z2),
                        make_matrix_ring(z2, 2)}) {
    CAPTURE(r.name());
    auto c = classify_completeness(r);
    CHECK(c.status == CheckStatus::pass);
    CHECK(c.witness["complete"] == naive_complete(r));
  }
  CHECK(branches_of(classify_completeness(make_product_ring(z2, z2)))
        == std::vector<std::string>{"ii"});
  CHECK(branches_of(classify_completeness(make_product_ring(make_product_ring(z2, z2), z2)))
            .empty());
}

TEST_CASE("annihilating-ideal graph equals the IPO graph on commutative rings") {
  auto edges = [](ZdGraph const& g) {
    std::set<std::pair<Set, Set>> out;
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (std::size_t j = 0; j < g.size(); ++j) {
        if (g.edge(i, j)) {
          out.emplace(g.label_set(i).elements(), g.label_set(j).elements());
        }
      }
    }
    return out;
  };
  auto labels = [](ZdGraph const& g) {
    std::set<Set> out;
    for (std::size_t i = 0; i < g.size(); ++i) {
      out.insert(g.label_set(i).elements());
    }
    return out;
  };
  for (auto const& r : ring_corpus()) {
    if (!r.is_commutative()) {
      CHECK_THROWS_AS(annihilating_ideal_graph(r), HypothesisError);
      continue;
    }
    CAPTURE(r.name());
    auto ag   = annihilating_ideal_graph(r);
    auto apog = directed_zd_graph(build_ipo(r));
    CHECK(labels(ag) == labels(apog));
    CHECK(edges(ag) == edges(apog));
  }
  auto z12 = annihilating_ideal_graph(make_cyclic_ring(12));
  CHECK(undirected_diameter(z12) == Distance::finite(3));
}

TEST_CASE("matrix checks") {
  for (std::size_t p : {2, 3, 4}) {
    CAPTURE(p);
    auto m = analyze_matrix(make_cyclic_ring(p), 2);
    auto lower = check_matrix_diam_lower(m);
    CHECK(lower.status == CheckStatus::pass);
    CHECK(lower.witness["both_vertices"] == true);
    CHECK(lower.witness["products_nonzero"] == true);
    CHECK(check_matrix_diam_monotone(m).status == CheckStatus::pass);
    auto gr = check_matrix_girth(m);
    CHECK(gr.status == CheckStatus::pass);
    CHECK(gr.witness["girth"] == 3);
  }
  auto z4 = check_matrix_diam_monotone(make_cyclic_ring(4), 2);
  CHECK(z4.witness["base_diameter"].is_null());
  CHECK(z4.witness["ag_diameter"].is_null());

  auto z2 = make_cyclic_ring(2);
  CHECK_THROWS_AS(analyze_matrix(z2, 1), HypothesisError);
  CHECK_THROWS_AS(analyze_matrix(make_cyclic_ring(1), 2), HypothesisError);
  CHECK_THROWS_AS(analyze_matrix(make_matrix_ring(z2, 2), 2), HypothesisError);
  CHECK_THROWS_AS(analyze_matrix(make_cyclic_ring(7), 3, 1000), CapacityError);
}

TEST_CASE("run_all") {
  auto z8 = run_all(make_cyclic_ring(8));
  CHECK(z8.ipo_size == 4);
  CHECK(z8.metrics.complete);
  CHECK_FALSE(z8.any_failed());
  std::vector<std::string> names;
  for (auto const& c : z8.checks) {
    names.push_back(c.name);
  }
  CHECK(names
        == std::vector<std::string>{"ipo_closure", "directed_connectivity_iff", "directed_paths",
                                    "undirected_connectivity", "undirected_paths",
                                    "girth_bound", "duo_ann_sets", "not_tournament",
                                    "completeness_classification", "matrix_diam_lower",
                                    "matrix_diam_monotone", "matrix_girth"});
  CHECK(z8.checks.back().status == CheckStatus::not_applicable);

  auto z5 = run_all(make_cyclic_ring(5), "Z5");
  CHECK(z5.expr == "Z5");
  CHECK(z5.vertex_count == 0);
  CHECK(z5.metrics.undirected_diameter.is_empty());
  CHECK_FALSE(z5.any_failed());

  auto z12 = run_all(make_cyclic_ring(12));
  CHECK(z12.metrics.directed_diameter == Distance::finite(3));
  CHECK(z12.metrics.girth.is_infinite());
  CHECK(z12.left_ideal_count == 6);
  CHECK(z12.ipo_size == 6);

  auto m = run_all(make_matrix_ring(make_cyclic_ring(2), 2));
  CHECK(m.left_ideal_count == 5);
  CHECK(m.ipo_size == 17);
  CHECK(m.vertex_count == 15);
  CHECK_FALSE(m.any_failed());
  for (auto const& c : m.checks) {
    if (c.name.rfind("matrix_", 0) == 0) {
      CHECK(c.status == CheckStatus::pass);
    }
  }

  for (auto const& r : ring_corpus()) {
    CAPTURE(r.name());
    auto rep = run_all(r);
    for (auto const& c : rep.checks) {
      CAPTURE(c.name);
      CAPTURE(c.witness.dump());
      CHECK_FALSE(c.failed());
    }
  }
}

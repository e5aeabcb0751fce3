#include "zdgraph/theorems.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>

#include "zdgraph/ideals.hpp"

namespace zdg {

  Json distance_json(Distance d) {
    switch (d.kind()) {
      case Distance::Kind::empty:
        return nullptr;
      case Distance::Kind::infinite:
        return "inf";
      default:
        return d.value();
    }
  }

  std::string to_string(CheckStatus s) {
    switch (s) {
      case CheckStatus::pass:
        return "pass";
      case CheckStatus::fail:
        return "fail";
      default:
        return "not-applicable";
    }
  }

  namespace {

    CheckResult verdict(std::string name, bool ok, Json witness) {
      return {std::move(name), ok ? CheckStatus::pass : CheckStatus::fail,
              std::move(witness)};
    }

    CheckResult not_applicable(std::string name, std::string hypothesis,
                               Json detail = Json::object()) {
      Json w          = Json::object();
      w["hypothesis"] = std::move(hypothesis);
      for (auto const& [k, v] : detail.items()) {
        w[k] = v;
      }
      return {std::move(name), CheckStatus::not_applicable, std::move(w)};
    }

    Json labels(FiniteSemigroupWithZero const& s, ElementSet const& xs) {
      Json out = Json::array();
      xs.for_each([&](Element x) { out.push_back(s.label(x)); });
      return out;
    }

    Json labels(FiniteSemigroupWithZero const& s, std::vector<Element> const& xs) {
      Json out = Json::array();
      for (Element x : xs) {
        out.push_back(s.label(x));
      }
      return out;
    }

    Json position_labels(ZdGraph const& g, std::vector<std::size_t> const& ps) {
      Json out = Json::array();
      for (std::size_t p : ps) {
        out.push_back(g.label(p));
      }
      return out;
    }

    bool at_most(Distance d, std::size_t bound) {
      return d.is_empty() || (d.is_finite() && d.value() <= bound);
    }

    // Hop counts from `src`; max() for unreachable.
    std::vector<std::size_t> bfs(Adjacency const& adj, std::size_t src) {
      std::vector<std::size_t> dist(adj.size(),
                                    std::numeric_limits<std::size_t>::max());
      std::deque<std::size_t>  queue{src};
      dist[src] = 0;
      while (!queue.empty()) {
        std::size_t u = queue.front();
        queue.pop_front();
        adj[u].for_each([&](Element v) {
          if (dist[v] == std::numeric_limits<std::size_t>::max()) {
            dist[v] = dist[u] + 1;
            queue.push_back(v);
          }
        });
      }
      return dist;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Semigroup-level checks
  ////////////////////////////////////////////////////////////////////////

  CheckResult check_directed_connectivity_iff(FiniteSemigroupWithZero const& s) {
    ZdGraph const g    = directed_zd_graph(s);
    AnnSets const ann  = ann_sets(s);
    auto const    conn = directed_connectivity(g);
    bool const    same = ann.a_left == ann.a_right;

    Json w                    = Json::object();
    w["a_left_equals_a_right"] = same;
    w["connected"]            = conn.connected;
    w["diameter"]             = distance_json(conn.diameter);
    bool ok = conn.connected == same;
    if (!conn.connected && g.size() >= 2) {
      w["unreachable"] = position_labels(g, {conn.witness.first, conn.witness.second});
    }
    if (!same) {
      ElementSet diff = ann.a_left;
      diff |= ann.a_right;
      ElementSet both = ann.a_left;
      both &= ann.a_right;
      diff.subtract(both);
      w["one_sided"] = s.label(static_cast<Element>(diff.first()));
    }
    if (conn.connected && !at_most(conn.diameter, 3)) {
      ok              = false;
      w["farthest"]   = position_labels(g, {conn.witness.first, conn.witness.second});
    }
    return verdict("directed_connectivity_iff", ok, std::move(w));
  }

  CheckResult check_undirected_connectivity(FiniteSemigroupWithZero const& s) {
    ZdGraph const g    = directed_zd_graph(s);
    auto const    conn = undirected_connectivity(g);
    Json          w    = Json::object();
    w["connected"]     = conn.connected;
    w["diameter"]      = distance_json(conn.diameter);
    bool const ok      = conn.connected && at_most(conn.diameter, 3);
    if (!ok) {
      w["pair"] = position_labels(g, {conn.witness.first, conn.witness.second});
    }
    return verdict("undirected_connectivity", ok, std::move(w));
  }

  CheckResult check_girth_bound(FiniteSemigroupWithZero const& s) {
    ZdGraph const g  = directed_zd_graph(s);
    auto const    gr = girth_with_cycle(g);
    Json          w  = Json::object();
    w["girth"]       = gr.length ? Json(*gr.length) : Json("inf");
    if (gr.length) {
      w["cycle"] = position_labels(g, gr.cycle);
    }
    bool const ok = !gr.length || *gr.length == 3 || *gr.length == 4;
    return verdict("girth_bound", ok, std::move(w));
  }

  ////////////////////////////////////////////////////////////////////////
  // Constructive paths
  ////////////////////////////////////////////////////////////////////////

  PathBuilder::PathBuilder(FiniteSemigroupWithZero const& s)
      : s_(&s), ann_(ann_sets(s)) {}

  std::vector<Element> PathBuilder::path(Element a, Element b,
                                         PathMode mode) const {
    if (a >= s_->order() || b >= s_->order() || !ann_.d_star.contains(a)
        || !ann_.d_star.contains(b)) {
      throw InvalidArgument("path endpoints must be vertices");
    }
    if (a == b) {
      throw InvalidArgument("path endpoints must be distinct");
    }
    if (mode == PathMode::directed) {
      if (ann_.a_left != ann_.a_right) {
        throw HypothesisError("directed paths need A^l(S) = A^r(S)");
      }
      return finish(directed(a, b), mode);
    }
    return finish(undirected(a, b), mode);
  }

  std::vector<Element> PathBuilder::directed(Element a, Element b) const {
    if (mul(a, b) == 0) {
      return {a, b};
    }
    // a is in A^r, b in A^l: pick the first partners.
    Element c = 0, d = 0;
    for (Element x : ann_.d_star.elements()) {
      if (c == 0 && mul(a, x) == 0) {
        c = x;
      }
      if (d == 0 && mul(x, b) == 0) {
        d = x;
      }
    }
    if (c == 0 || d == 0) {
      throw InternalError("no annihilating partner for a vertex");
    }
    if (c == d) {
      return {a, c, b};
    }
    if (mul(c, d) == 0) {
      return {a, c, d, b};
    }
    return {a, mul(c, d), b};
  }

  std::vector<Element> PathBuilder::undirected(Element a, Element b) const {
    if (linked(a, b)) {
      return {a, b};
    }
    bool const a_sq = mul(a, a) == 0;
    bool const b_sq = mul(b, b) == 0;
    if (a_sq && b_sq) {
      return {a, mul(a, b), b};
    }
    auto partner = [&](Element v) -> Element {
      for (Element x : ann_.d_star.elements()) {
        if (x != a && x != b && linked(x, v)) {
          return x;
        }
      }
      throw InternalError("no annihilating partner for a vertex");
    };
    if (a_sq) {
      Element c = partner(b);
      if (linked(a, c)) {
        return {a, c, b};
      }
      return mul(b, c) == 0 ? std::vector<Element>{a, mul(c, a), b}
                            : std::vector<Element>{a, mul(a, c), b};
    }
    if (b_sq) {
      Element c = partner(a);
      if (linked(c, b)) {
        return {a, c, b};
      }
      return mul(a, c) == 0 ? std::vector<Element>{a, mul(c, b), b}
                            : std::vector<Element>{a, mul(b, c), b};
    }
    Element c = partner(a);
    Element d = partner(b);
    if (linked(b, c)) {
      return {a, c, b};
    }
    if (linked(a, d)) {
      return {a, d, b};
    }
    if (linked(c, d)) {
      return {a, c, d, b};
    }
    bool const ac = mul(a, c) == 0;  // otherwise ca = 0
    bool const db = mul(d, b) == 0;  // otherwise bd = 0
    if (ac && db) {
      return {a, mul(c, d), b};
    }
    if (ac) {
      return {a, mul(c, b), d, b};
    }
    if (!db) {
      return {a, mul(d, c), b};
    }
    return {a, mul(b, c), d, b};
  }

  std::vector<Element> PathBuilder::finish(std::vector<Element> p,
                                           PathMode mode) const {
    std::vector<Element> out;
    for (Element v : p) {
      auto it = std::find(out.begin(), out.end(), v);
      if (it != out.end()) {
        out.erase(it + 1, out.end());
      } else {
        out.push_back(v);
      }
    }
    auto describe = [&] {
      std::string text;
      for (Element v : p) {
        text += (text.empty() ? "" : " ") + s_->label(v);
      }
      return text;
    };
    if (out.size() < 2 || out.front() != p.front() || out.back() != p.back()) {
      throw InternalError("degenerate path " + describe());
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (!ann_.d_star.contains(out[i])) {
        throw InternalError("path leaves the vertex set: " + describe());
      }
      if (i + 1 < out.size()) {
        bool step = mode == PathMode::directed ? mul(out[i], out[i + 1]) == 0
                                               : linked(out[i], out[i + 1]);
        if (!step) {
          throw InternalError("path has a non-zero step: " + describe());
        }
      }
    }
    return out;
  }

  std::vector<Element> constructive_path(FiniteSemigroupWithZero const& s,
                                         Element a, Element b, PathMode mode) {
    return PathBuilder(s).path(a, b, mode);
  }

  CheckResult check_constructive_paths(FiniteSemigroupWithZero const& s,
                                       PathMode                       mode) {
    bool const        directed = mode == PathMode::directed;
    std::string const name = directed ? "directed_paths" : "undirected_paths";
    PathBuilder const pb(s);
    if (directed && pb.ann().a_left != pb.ann().a_right) {
      return not_applicable(name, "A^l(S) = A^r(S)");
    }
    ZdGraph const    g   = directed_zd_graph(s);
    Adjacency const& adj = directed ? g.directed() : g.undirected();

    std::size_t          pairs = 0, longest = 0;
    std::vector<Element> longest_path;
    for (std::size_t i = 0; i < g.size(); ++i) {
      auto const dist = bfs(adj, i);
      for (std::size_t j = 0; j < g.size(); ++j) {
        if (i == j) {
          continue;
        }
        ++pairs;
        Element const a = g.vertex(i), b = g.vertex(j);
        Json          w = Json::object();
        w["pair"]       = labels(s, std::vector<Element>{a, b});
        std::vector<Element> p;
        try {
          p = pb.path(a, b, mode);
        } catch (InternalError const& e) {
          w["error"] = e.what();
          return verdict(name, false, std::move(w));
        }
        std::size_t const len = p.size() - 1;
        if (len > 3 || dist[j] > len) {
          w["path"] = labels(s, p);
          w["bfs_distance"] =
              dist[j] == std::numeric_limits<std::size_t>::max() ? Json("inf")
                                                                 : Json(dist[j]);
          return verdict(name, false, std::move(w));
        }
        if (len > longest) {
          longest      = len;
          longest_path = std::move(p);
        }
      }
    }
    Json w          = Json::object();
    w["pairs"]      = pairs;
    w["max_length"] = longest;
    if (!longest_path.empty()) {
      w["longest"] = labels(s, longest_path);
    }
    return verdict(name, true, std::move(w));
  }

  ////////////////////////////////////////////////////////////////////////
  // Ring-level checks
  ////////////////////////////////////////////////////////////////////////

  CheckResult check_ipo_closure(FiniteRing const& r) {
    IpoCollection const ipo = collect_ipo(r);
    Json                w   = Json::object();
    try {
      build_ipo(r, ipo);
    } catch (ClosureViolation const& e) {
      w["factors"] = Json::array({e.left().to_string(), e.right().to_string()});
      return verdict("ipo_closure", false, std::move(w));
    }
    w["ipo_size"] = ipo.size();
    return verdict("ipo_closure", true, std::move(w));
  }

  CheckResult check_duo_ann_sets(FiniteRing const& r) {
    IpoCollection const ipo = collect_ipo(r);
    return check_duo_ann_sets(r, ipo, build_ipo(r, ipo));
  }

  CheckResult check_duo_ann_sets(FiniteRing const& r, IpoCollection const& ipo,
                                 FiniteSemigroupWithZero const& s) {
    std::string const name = "duo_ann_sets";
    for (auto const& [list, side] :
         {std::pair{&ipo.left_ideals, "left"}, std::pair{&ipo.right_ideals, "right"}}) {
      for (auto const& ideal : *list) {
        if (!ideal.two_sided()) {
          Json d              = Json::object();
          d["one_sided_ideal"] = ideal.set.to_string();
          d["side"]           = side;
          return not_applicable(name, "R is a Duo ring", std::move(d));
        }
      }
    }
    ElementSet expected = ElementSet::full(s.order());
    expected.erase(0);
    Element const whole = ipo.find(r.all());
    if (whole < s.order()) {
      expected.erase(whole);
    }
    AnnSets const ann = ann_sets(s);
    Json          w   = Json::object();
    w["a_left"]       = labels(s, ann.a_left);
    w["a_right"]      = labels(s, ann.a_right);
    bool const ok     = ann.a_left == expected && ann.a_right == expected;
    if (!ok) {
      w["expected"] = labels(s, expected);
    }
    return verdict(name, ok, std::move(w));
  }

  CheckResult check_not_tournament(FiniteRing const& r) {
    return check_not_tournament(build_ipo(r));
  }

  CheckResult check_not_tournament(FiniteSemigroupWithZero const& s) {
    std::string const name = "not_tournament";
    for (Element a = 1; a < s.order(); ++a) {
      if (s.product(a, a) == 0) {
        Json d                = Json::object();
        d["square_zero"]      = s.label(a);
        return not_applicable(name, "A^2 != 0 for every nonzero A", std::move(d));
      }
    }
    AnnSets const ann  = ann_sets(s);
    ElementSet    both = ann.a_left;
    both &= ann.a_right;
    if (both.none()) {
      return not_applicable(name, "A^l and A^r intersect");
    }
    ZdGraph const g = directed_zd_graph(s);
    Json          w = Json::object();
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (std::size_t j = i + 1; j < g.size(); ++j) {
        if (g.arc(i, j) == g.arc(j, i)) {
          w["pair"]     = position_labels(g, {i, j});
          w["arcs"]     = g.arc(i, j) ? "both" : "none";
          return verdict(name, true, std::move(w));
        }
      }
    }
    w["tournament"] = true;
    return verdict(name, false, std::move(w));
  }

  namespace {

    // eRe is a division ring with identity e.
    bool is_division_corner(FiniteRing const& r, Element e) {
      ElementSet corner(r.order());
      for (Element x = 0; x < r.order(); ++x) {
        corner.insert(r.mul(r.mul(e, x), e));
      }
      if (corner.count() < 2) {
        return false;
      }
      auto const xs = corner.elements();
      for (Element x : xs) {
        if (x == 0) {
          continue;
        }
        bool inverse = std::any_of(xs.begin(), xs.end(), [&](Element y) {
          return r.mul(x, y) == e && r.mul(y, x) == e;
        });
        if (!inverse) {
          return false;
        }
      }
      return true;
    }

  }  // namespace

  CheckResult classify_completeness(FiniteRing const& r) {
    IpoCollection const ipo = collect_ipo(r);
    return classify_completeness(r, ipo, apog_graph(r, ipo));
  }

  CheckResult classify_completeness(FiniteRing const& r, IpoCollection const& ipo,
                                    ZdGraph const& g) {
    std::string const name = "completeness_classification";
    if (r.is_zero_ring()) {
      return not_applicable(name, "1 != 0");
    }
    Json branches = Json::array();
    Json w        = Json::object();

    // (i) D(R)^2 = 0
    auto const zd     = element_zero_divisors(r).elements();
    bool       square = true;
    for (Element a : zd) {
      for (Element b : zd) {
        square = square && r.mul(a, b) == 0;
      }
    }
    if (square) {
      branches.push_back("i");
    }

    // (ii) nontrivial central idempotent splitting R into two division rings
    for (Element e : central_idempotents(r)) {
      if (e == 0 || e == r.one()) {
        continue;
      }
      Element const f     = r.sub(r.one(), e);
      bool          split = true;
      for (Element t : r.additive_generators()) {
        split = split && r.mul(r.mul(e, t), f) == 0 && r.mul(r.mul(f, t), e) == 0;
      }
      if (split && is_division_corner(r, e) && is_division_corner(r, f)) {
        branches.push_back("ii");
        w["idempotent"] = e;
        break;
      }
    }

    // (iii) local with IPO(R) = {0, m, m^2, R}
    auto const local = is_local_ring(r);
    if (local.local) {
      ElementSet const m  = *local.maximal_ideal;
      ElementSet const m2 = ideal_product(r, m, m);
      std::set<ElementSet> target{r.zero_set(), m, m2, r.all()};
      std::set<ElementSet> actual;
      for (auto const& x : ipo.elements) {
        actual.insert(x.set);
      }
      if (actual == target) {
        branches.push_back("iii");
        w["maximal_ideal"]         = m.to_string();
        w["maximal_ideal_squared"] = m2.to_string();
      }
    }

    bool const complete = is_complete(g);
    bool const ok       = complete == !branches.empty();
    Json       out      = Json::object();
    out["complete"]     = complete;
    out["branches"]     = std::move(branches);
    for (auto const& [k, v] : w.items()) {
      out[k] = v;
    }
    return verdict(name, ok, std::move(out));
  }

  ////////////////////////////////////////////////////////////////////////
  // Matrix rings
  ////////////////////////////////////////////////////////////////////////

  ZdGraph annihilating_ideal_graph(FiniteRing const& r) {
    if (!r.is_commutative()) {
      throw HypothesisError("the annihilating-ideal graph needs a commutative ring");
    }
    auto const              ideals = enumerate_one_sided_ideals(r, Side::left);
    std::vector<ElementSet> sets;
    for (auto const& i : ideals) {
      sets.push_back(i.set);
    }
    std::size_t const m = sets.size();
    Adjacency         zp(m, ElementSet(m));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (reference::ideal_product(r, sets[i], sets[j]) == r.zero_set()) {
          zp[i].insert(static_cast<Element>(j));
        }
      }
    }
    return ZdGraph(zp, std::move(sets));
  }

  MatrixAnalysis analyze_matrix(FiniteRing const& base, std::size_t k,
                                std::size_t cap) {
    if (k < 2) {
      throw HypothesisError("matrix checks need k >= 2");
    }
    if (base.is_zero_ring()) {
      throw HypothesisError("matrix checks need a nonzero base ring");
    }
    if (!base.is_commutative()) {
      throw HypothesisError("matrix checks need a commutative base ring");
    }
    FiniteRing    ring = make_matrix_ring(base, k, cap);
    IpoCollection ipo  = collect_ipo(ring);
    ZdGraph       g    = apog_graph(ring, ipo);
    return MatrixAnalysis{base, k, std::move(ring), std::move(ipo), std::move(g)};
  }

  CheckResult check_matrix_diam_lower(MatrixAnalysis const& m) {
    FiniteRing const& mk   = m.ring;
    Element const     e11  = matrix_unit(mk, 0, 0);
    Subgroup const    a    = span_of(mk, principal_left_ideal(mk, e11).generators);
    Subgroup const    b    = span_of(mk, principal_right_ideal(mk, e11).generators);
    bool const        ab   = ideal_product(mk, a, b).set != mk.zero_set();
    bool const        ba   = ideal_product(mk, b, a).set != mk.zero_set();
    auto const        pa   = m.graph.position(m.ipo.find(a.set));
    auto const        pb   = m.graph.position(m.ipo.find(b.set));
    auto const        conn = undirected_connectivity(m.graph);

    Json w               = Json::object();
    w["diameter"]        = distance_json(conn.diameter);
    w["farthest_pair"]   = Json::array({m.graph.vertex(conn.witness.first),
                                        m.graph.vertex(conn.witness.second)});
    w["column_ideal_size"] = a.set.count();
    w["row_ideal_size"]    = b.set.count();
    w["both_vertices"]     = pa.has_value() && pb.has_value();
    w["products_nonzero"]  = ab && ba;
    bool const ok = conn.diameter.rank_compare(Distance::finite(2)) >= 0
                    && pa && pb && ab && ba;
    return verdict("matrix_diam_lower", ok, std::move(w));
  }

  CheckResult check_matrix_diam_monotone(MatrixAnalysis const& m) {
    Distance const      big      = undirected_diameter(m.graph);
    IpoCollection const base_ipo = collect_ipo(m.base);
    Distance const small = undirected_diameter(apog_graph(m.base, base_ipo));
    Distance const ag    = undirected_diameter(annihilating_ideal_graph(m.base));
    Json           w     = Json::object();
    w["matrix_diameter"] = distance_json(big);
    w["base_diameter"]   = distance_json(small);
    w["ag_diameter"]     = distance_json(ag);
    bool const ok        = big.rank_compare(small) >= 0 && ag == small;
    return verdict("matrix_diam_monotone", ok, std::move(w));
  }

  CheckResult check_matrix_girth(MatrixAnalysis const& m) {
    auto const gr = girth_with_cycle(m.graph);
    Json       w  = Json::object();
    w["girth"]    = gr.length ? Json(*gr.length) : Json("inf");
    if (gr.length) {
      Json cycle = Json::array();
      for (std::size_t p : gr.cycle) {
        cycle.push_back(m.graph.vertex(p));
      }
      w["cycle"] = std::move(cycle);
    }
    return verdict("matrix_girth", gr.length == std::optional<std::size_t>(3),
                   std::move(w));
  }

  CheckResult check_matrix_diam_lower(FiniteRing const& base, std::size_t k,
                                      std::size_t cap) {
    return check_matrix_diam_lower(analyze_matrix(base, k, cap));
  }

  CheckResult check_matrix_diam_monotone(FiniteRing const& base, std::size_t k,
                                         std::size_t cap) {
    return check_matrix_diam_monotone(analyze_matrix(base, k, cap));
  }

  CheckResult check_matrix_girth(FiniteRing const& base, std::size_t k,
                                 std::size_t cap) {
    return check_matrix_girth(analyze_matrix(base, k, cap));
  }

  ////////////////////////////////////////////////////////////////////////
  // Whole-ring analysis
  ////////////////////////////////////////////////////////////////////////

  bool AnalysisReport::any_failed() const {
    return std::any_of(checks.begin(), checks.end(),
                       [](CheckResult const& c) { return c.failed(); });
  }

  std::vector<CheckResult> run_semigroup_checks(FiniteSemigroupWithZero const& s) {
    return {check_directed_connectivity_iff(s),
            check_constructive_paths(s, PathMode::directed),
            check_undirected_connectivity(s),
            check_constructive_paths(s, PathMode::undirected),
            check_girth_bound(s)};
  }

  AnalysisReport run_all(FiniteRing const& r, std::string expr) {
    AnalysisReport rep;
    rep.expr       = expr.empty() ? r.name() : std::move(expr);
    rep.ring_order = r.order();

    IpoCollection ipo     = collect_ipo(r);
    rep.left_ideal_count  = ipo.left_ideals.size();
    rep.right_ideal_count = ipo.right_ideals.size();
    rep.ipo_size          = ipo.size();

    std::optional<FiniteSemigroupWithZero> s;
    Json                                   closure = Json::object();
    try {
      s.emplace(build_ipo(r, ipo));
      closure["ipo_size"] = ipo.size();
      rep.checks.push_back({"ipo_closure", CheckStatus::pass, closure});
    } catch (ClosureViolation const& e) {
      closure["factors"] = Json::array({e.left().to_string(), e.right().to_string()});
      rep.checks.push_back({"ipo_closure", CheckStatus::fail, closure});
    }

    rep.graph        = s ? directed_zd_graph(*s) : apog_graph(r, ipo);
    rep.vertex_count = rep.graph.size();
    rep.metrics      = compute_metrics(rep.graph);

    if (s) {
      for (auto& c : run_semigroup_checks(*s)) {
        rep.checks.push_back(std::move(c));
      }
      rep.checks.push_back(check_duo_ann_sets(r, ipo, *s));
      rep.checks.push_back(check_not_tournament(*s));
    } else {
      for (char const* n : {"directed_connectivity_iff", "directed_paths",
                            "undirected_connectivity", "undirected_paths",
                            "girth_bound", "duo_ann_sets", "not_tournament"}) {
        rep.checks.push_back(not_applicable(n, "IPO(R) is closed"));
      }
    }
    rep.checks.push_back(classify_completeness(r, ipo, rep.graph));

    MatrixShape const* shape = r.matrix_shape();
    bool const matrix = shape != nullptr && shape->k >= 2 && !shape->base->is_zero_ring()
                        && shape->base->is_commutative();
    if (matrix) {
      MatrixAnalysis m{*shape->base, shape->k, r, std::move(ipo), rep.graph};
      rep.checks.push_back(check_matrix_diam_lower(m));
      rep.checks.push_back(check_matrix_diam_monotone(m));
      rep.checks.push_back(check_matrix_girth(m));
    } else {
      for (char const* n : {"matrix_diam_lower", "matrix_diam_monotone", "matrix_girth"}) {
        rep.checks.push_back(
            not_applicable(n, "R = M_k(S) with k >= 2 over a nonzero commutative S"));
      }
    }
    return rep;
  }

}  // namespace zdg

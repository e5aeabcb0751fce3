#include "zdgraph/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace zdg {

  ZdGraph::ZdGraph(Adjacency const& zp, std::vector<ElementSet> label_sets) {
    AnnSets const     ann = ann_sets(zp);
    std::size_t const m   = zp.size();
    vertices_             = ann.d_star.elements();
    std::size_t const v   = vertices_.size();
    if (!label_sets.empty()) {
      if (label_sets.size() != m) {
        throw InvalidArgument("one label set per source element expected");
      }
      for (Element x : vertices_) {
        sets_.push_back(std::move(label_sets[x]));
      }
    }
    out_.assign(v, ElementSet(v));
    both_.assign(v, ElementSet(v));
    for (std::size_t i = 0; i < v; ++i) {
      for (std::size_t j = 0; j < v; ++j) {
        if (i != j && zp[vertices_[i]].contains(vertices_[j])) {
          out_[i].insert(static_cast<Element>(j));
          both_[i].insert(static_cast<Element>(j));
          both_[j].insert(static_cast<Element>(i));
        }
      }
    }
  }

  std::optional<std::size_t> ZdGraph::position(Element source_index) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), source_index);
    if (it == vertices_.end() || *it != source_index) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - vertices_.begin());
  }

  std::string ZdGraph::label(std::size_t pos) const {
    return has_label_sets() ? sets_[pos].to_string()
                            : std::to_string(vertices_[pos]);
  }

  ZdGraph directed_zd_graph(FiniteSemigroupWithZero const& s) {
    return ZdGraph(zero_products(s), s.label_sets());
  }

  ZdGraph apog_graph(FiniteRing const& r, IpoCollection const& ipo) {
    return ZdGraph(ipo_zero_products(r, ipo), ipo.label_sets());
  }

  ZdGraph element_zd_graph(FiniteRing const& r) {
    std::size_t const n = r.order();
    Adjacency         zp(n, ElementSet(n));
#pragma omp parallel for schedule(dynamic, 16)
    for (std::size_t a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (r.mul(static_cast<Element>(a), b) == 0) {
          zp[a].insert(b);
        }
      }
    }
    return ZdGraph(zp, {});
  }

  namespace {
    Connectivity connectivity(Adjacency const& adj) {
      Connectivity out;
      if (adj.size() < 2) {
        return out;
      }
      auto summary = kernels::distance_summary(adj);
      out.connected = summary.all_reachable;
      out.diameter  = summary.all_reachable
                          ? Distance::finite(summary.max_distance)
                          : Distance::infinite();
      out.witness   = summary.witness;
      return out;
    }
  }  // namespace

  Connectivity directed_connectivity(ZdGraph const& g) {
    return connectivity(g.directed());
  }

  Connectivity undirected_connectivity(ZdGraph const& g) {
    return connectivity(g.undirected());
  }

  Distance undirected_diameter(ZdGraph const& g) {
    return undirected_connectivity(g).diameter;
  }

  GirthResult girth_with_cycle(ZdGraph const& g) {
    return kernels::girth(g.undirected());
  }

  Distance girth(ZdGraph const& g) {
    auto result = girth_with_cycle(g);
    return result.length ? Distance::finite(*result.length)
                         : Distance::infinite();
  }

  bool is_complete(ZdGraph const& g) {
    std::size_t const v = g.size();
    return std::all_of(g.undirected().begin(), g.undirected().end(),
                       [v](ElementSet const& row) { return row.count() == v - 1; });
  }

  bool is_tournament(ZdGraph const& g) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (std::size_t j = i + 1; j < g.size(); ++j) {
        if (g.arc(i, j) == g.arc(j, i)) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<Element> ad_neighborhood(ZdGraph const& g, Element vertex) {
    auto pos = g.position(vertex);
    if (!pos) {
      throw InvalidArgument(std::to_string(vertex) + " is not a vertex");
    }
    Adjacency const& adj  = g.undirected();
    ElementSet       ball = adj[*pos];
    ball.insert(static_cast<Element>(*pos));
    ElementSet second(g.size());
    adj[*pos].for_each([&](Element x) { second |= adj[x]; });
    ball |= second;
    std::vector<Element> out;
    ball.for_each([&](Element p) { out.push_back(g.vertex(p)); });
    return out;
  }

  std::vector<Element> adu_neighborhood(ZdGraph const& g, ElementSet const& d) {
    if (!g.has_label_sets()) {
      throw InvalidArgument("adu needs a graph whose vertices are element sets");
    }
    ElementSet acc(g.size());
    for (std::size_t p = 0; p < g.size(); ++p) {
      if (g.label_set(p).subset_of(d)) {
        for (Element x : ad_neighborhood(g, g.vertex(p))) {
          acc.insert(static_cast<Element>(*g.position(x)));
        }
      }
    }
    std::vector<Element> out;
    acc.for_each([&](Element p) { out.push_back(g.vertex(p)); });
    return out;
  }

  std::string export_dot(ZdGraph const& g, DotMode mode) {
    std::vector<std::size_t> order(g.size());
    std::iota(order.begin(), order.end(), 0);
    if (g.has_label_sets()) {
      std::vector<std::vector<Element>> keys;
      for (std::size_t p = 0; p < g.size(); ++p) {
        keys.push_back(g.label_set(p).elements());
      }
      std::stable_sort(order.begin(), order.end(),
                       [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
    }
    std::vector<std::size_t> rank(g.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      rank[order[i]] = i;
    }

    bool const         directed = mode == DotMode::directed;
    std::ostringstream out;
    out << (directed ? "digraph" : "graph") << " zd {\n";
    for (std::size_t p : order) {
      out << "  v" << g.vertex(p) << " [label=\"" << g.label(p) << "\"];\n";
    }
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (std::size_t j = 0; j < g.size(); ++j) {
        bool present = directed ? g.arc(i, j) : (i < j && g.edge(i, j));
        if (present) {
          std::size_t a = rank[i], b = rank[j];
          if (!directed && a > b) {
            std::swap(a, b);
          }
          edges.emplace_back(a, b);
        }
      }
    }
    std::sort(edges.begin(), edges.end());
    for (auto [a, b] : edges) {
      out << "  v" << g.vertex(order[a]) << (directed ? " -> " : " -- ") << "v"
          << g.vertex(order[b]) << ";\n";
    }
    out << "}\n";
    return out.str();
  }

  GraphMetrics compute_metrics(ZdGraph const& g) {
    GraphMetrics m;
    auto         dc       = directed_connectivity(g);
    m.directed_connected  = dc.connected;
    m.directed_diameter   = dc.diameter;
    m.undirected_diameter = undirected_diameter(g);
    m.girth               = girth(g);
    m.complete            = is_complete(g);
    m.tournament          = is_tournament(g);
    return m;
  }

}  // namespace zdg

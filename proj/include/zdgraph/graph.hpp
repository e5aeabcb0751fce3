#ifndef ZDGRAPH_GRAPH_HPP_
#define ZDGRAPH_GRAPH_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "zdgraph/distance.hpp"
#include "zdgraph/element_set.hpp"
#include "zdgraph/kernels.hpp"
#include "zdgraph/ring.hpp"
#include "zdgraph/semigroup.hpp"

namespace zdg {

  //! Zero-divisor graph on D(S)*: a -> b iff ab = 0 (a != b), and the
  //! undirected view a - b iff ab = 0 or ba = 0.
  //!
  //! Vertices are addressed by position 0..size()-1; vertex(i) maps a
  //! position back to the index in the source structure.
  class ZdGraph {
   public:
    ZdGraph() = default;

    //! `zero_products[a]` contains b iff ab = 0 in the source structure.
    //! `label_sets` is either empty or has one entry per source index.
    ZdGraph(Adjacency const& zero_products, std::vector<ElementSet> label_sets);

    std::size_t size() const noexcept {
      return vertices_.size();
    }
    std::vector<Element> const& vertices() const noexcept {
      return vertices_;
    }
    Element vertex(std::size_t pos) const noexcept {
      return vertices_[pos];
    }
    std::optional<std::size_t> position(Element source_index) const;

    bool has_label_sets() const noexcept {
      return !sets_.empty();
    }
    //! Element set of the vertex at `pos` (IPO graphs only).
    ElementSet const& label_set(std::size_t pos) const {
      return sets_[pos];
    }
    std::string label(std::size_t pos) const;

    Adjacency const& directed() const noexcept {
      return out_;
    }
    Adjacency const& undirected() const noexcept {
      return both_;
    }
    bool arc(std::size_t i, std::size_t j) const noexcept {
      return out_[i].contains(static_cast<Element>(j));
    }
    bool edge(std::size_t i, std::size_t j) const noexcept {
      return both_[i].contains(static_cast<Element>(j));
    }

   private:
    std::vector<Element>    vertices_;
    std::vector<ElementSet> sets_;
    Adjacency               out_;
    Adjacency               both_;
  };

  //! Γ(S).
  ZdGraph directed_zd_graph(FiniteSemigroupWithZero const& s);
  //! APOG(R) straight from the IPO collection, without a Cayley table.
  ZdGraph apog_graph(FiniteRing const& r, IpoCollection const& ipo);
  //! Element-level graph on the nonzero one-sided zero-divisors of R.
  ZdGraph element_zd_graph(FiniteRing const& r);

  struct Connectivity {
    bool     connected = true;
    Distance diameter  = Distance::empty();
    //! Unreachable pair, or a pair realising the diameter (positions).
    std::pair<std::size_t, std::size_t> witness{0, 0};
  };

  //! Strong connectivity over directed arcs; diameter over ordered pairs.
  Connectivity directed_connectivity(ZdGraph const& g);
  Connectivity undirected_connectivity(ZdGraph const& g);

  Distance undirected_diameter(ZdGraph const& g);
  //! Shortest cycle of the undirected view, or infinite.
  Distance    girth(ZdGraph const& g);
  GirthResult girth_with_cycle(ZdGraph const& g);
  bool        is_complete(ZdGraph const& g);
  bool        is_tournament(ZdGraph const& g);

  //! Closed radius-2 ball around `vertex` (a source index) in the
  //! undirected view, as source indices. Throws InvalidArgument for a
  //! non-vertex.
  std::vector<Element> ad_neighborhood(ZdGraph const& g, Element vertex);
  //! Union of ad(C) over vertices C whose element set is inside `d`.
  std::vector<Element> adu_neighborhood(ZdGraph const& g, ElementSet const& d);

  enum class DotMode { directed, undirected };

  //! Deterministic DOT text. Vertices are ordered by their sorted element
  //! lists (or index), edges by endpoint order.
  std::string export_dot(ZdGraph const& g, DotMode mode);

  struct GraphMetrics {
    bool     directed_connected  = true;
    Distance directed_diameter   = Distance::empty();
    Distance undirected_diameter = Distance::empty();
    Distance girth               = Distance::infinite();
    bool     complete            = true;
    bool     tournament          = true;
  };

  GraphMetrics compute_metrics(ZdGraph const& g);

}  // namespace zdg

#endif  // ZDGRAPH_GRAPH_HPP_

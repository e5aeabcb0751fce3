#ifndef ZDGRAPH_KERNELS_HPP_
#define ZDGRAPH_KERNELS_HPP_

// Hot loops of the library. Everything in zdg::kernels may run its outer
// loop under OpenMP and is what the rest of the library calls. zdg::reference
// holds the direct, serial transcription of each definition; it is kept for
// the test suite and the benchmark and is never used on a production path.

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "zdgraph/additive_span.hpp"
#include "zdgraph/element_set.hpp"
#include "zdgraph/ring.hpp"

namespace zdg {

  //! Rows of a graph adjacency over vertex positions 0..V-1.
  using Adjacency = std::vector<ElementSet>;

  //! Shortest-path summary over ordered pairs of distinct vertices.
  struct DistanceSummary {
    bool        all_reachable = true;
    std::size_t max_distance  = 0;  // 0 unless all_reachable
    //! First unreachable ordered pair if any, else the first pair (in
    //! source-major order) realising max_distance.
    std::pair<std::size_t, std::size_t> witness{0, 0};
  };

  struct GirthResult {
    std::optional<std::size_t> length;  // nullopt: acyclic
    std::vector<std::size_t>   cycle;   // vertex positions of a shortest cycle
  };

  //! Free entries of a semigroup-with-zero Cayley table, row-major over
  //! rows/columns 1..m-1. Row and column 0 are implicitly 0.
  using TableCode = std::vector<Element>;

  namespace kernels {

    //! Distinct principal one-sided ideals Rx (left) or xR (right), in order
    //! of first generator x.
    std::vector<Subgroup> principal_ideals(FiniteRing const& r, Side side);

    //! Additive span of {g h : g in a, h in b} over generator lists.
    Subgroup ideal_product(FiniteRing const& r, std::span<Element const> a,
                           std::span<Element const> b);

    //! True iff every generator product g h is zero.
    bool product_vanishes(FiniteRing const& r, std::span<Element const> a,
                          std::span<Element const> b);

    //! rows[a] contains b iff elements[a] * elements[b] = {0}.
    Adjacency zero_products(FiniteRing const&            r,
                            std::vector<Subgroup> const& elements);

    //! Cayley table of the ideal-product operation on `elements`.
    //! Entries whose product is not among `elements` are set to
    //! elements.size(); `missing` receives the first such pair.
    std::vector<Element> ideal_cayley_table(
        FiniteRing const& r, std::vector<Subgroup> const& elements,
        std::unordered_map<ElementSet, Element, ElementSetHash> const& index,
        std::optional<std::pair<Element, Element>>& missing);

    DistanceSummary distance_summary(Adjacency const& adj);

    //! Undirected adjacency assumed.
    GirthResult girth(Adjacency const& adj);

    //! Associative tables of order m (2..4) in lexicographic order of codes.
    std::vector<TableCode> associative_tables(std::size_t m);

  }  // namespace kernels

  namespace reference {

    std::vector<Subgroup> principal_ideals(FiniteRing const& r, Side side);

    //! Closure of all |a| |b| pairwise products.
    ElementSet ideal_product(FiniteRing const& r, ElementSet const& a,
                             ElementSet const& b);

    Adjacency zero_products_from_table(std::size_t                 m,
                                       std::span<Element const> table);

    DistanceSummary distance_summary(Adjacency const& adj);

    //! min over edges (u, v) of 1 + the shortest u-v path avoiding (u, v).
    GirthResult girth(Adjacency const& adj);

    std::vector<TableCode> associative_tables(std::size_t m);

  }  // namespace reference

  //! Full m x m table for a code (row and column 0 zero).
  std::vector<Element> expand_table_code(std::size_t m, TableCode const& code);

}  // namespace zdg

#endif  // ZDGRAPH_KERNELS_HPP_

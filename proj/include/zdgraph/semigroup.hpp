#ifndef ZDGRAPH_SEMIGROUP_HPP_
#define ZDGRAPH_SEMIGROUP_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "zdgraph/additive_span.hpp"
#include "zdgraph/element_set.hpp"
#include "zdgraph/error.hpp"
#include "zdgraph/ideals.hpp"
#include "zdgraph/kernels.hpp"
#include "zdgraph/ring.hpp"

namespace zdg {

  //! Finite semigroup given by its Cayley table, with index 0 an absorbing
  //! zero. Instances produced by semigroup_from_table, build_ipo and
  //! enumerate_semigroups_with_zero are validated.
  class FiniteSemigroupWithZero {
   public:
    //! Unchecked; `table` is row-major m x m. `label_sets`, when given, holds
    //! one element subset per index (IPO elements).
    FiniteSemigroupWithZero(std::size_t m, std::vector<Element> table,
                            std::vector<ElementSet> label_sets = {});

    std::size_t order() const noexcept {
      return m_;
    }
    Element product(Element a, Element b) const noexcept {
      return table_[a * m_ + b];
    }
    std::span<Element const> table() const noexcept {
      return table_;
    }
    bool has_label_sets() const noexcept {
      return !label_sets_.empty();
    }
    std::vector<ElementSet> const& label_sets() const noexcept {
      return label_sets_;
    }
    //! "{0,2,4}" for IPO elements, the index otherwise.
    std::string label(Element a) const;

   private:
    std::size_t             m_;
    std::vector<Element>    table_;
    std::vector<ElementSet> label_sets_;
  };

  //! Validates associativity and that `zero_index` is absorbing, then
  //! renumbers so the zero sits at index 0 (swapping it with index 0).
  FiniteSemigroupWithZero semigroup_from_table(std::size_t          m,
                                               std::vector<Element> table,
                                               Element              zero_index);
  FiniteSemigroupWithZero semigroup_from_table(
      std::vector<std::vector<Element>> const& rows, Element zero_index);

  //! rows[a] contains b iff ab = 0.
  Adjacency zero_products(FiniteSemigroupWithZero const& s);

  //! D(S)*, A^l(S), A^r(S) as sets of semigroup indices.
  struct AnnSets {
    ElementSet d_star;
    ElementSet a_left;
    ElementSet a_right;
  };

  AnnSets ann_sets(Adjacency const& zero_products);
  AnnSets ann_sets(FiniteSemigroupWithZero const& s);

  //! Every associative table of the given order (2..4) with row and column
  //! 0 forced to 0, in lexicographic order of the free entries.
  std::vector<FiniteSemigroupWithZero> enumerate_semigroups_with_zero(
      std::size_t order);

  ////////////////////////////////////////////////////////////////////////
  // IPO(R)
  ////////////////////////////////////////////////////////////////////////

  //! The element sets of IPO(R) and the ideals they came from.
  struct IpoCollection {
    std::vector<OneSidedIdeal> left_ideals;
    std::vector<OneSidedIdeal> right_ideals;
    //! Sorted by bit-vector order; {0} at index 0.
    std::vector<Subgroup>                                   elements;
    std::unordered_map<ElementSet, Element, ElementSetHash> index;

    std::size_t size() const noexcept {
      return elements.size();
    }
    //! Index of an element set, or size() if it is not in IPO(R).
    Element find(ElementSet const& s) const;
    std::vector<ElementSet> label_sets() const;
  };

  //! Products IJ over all ordered pairs of left or right ideals.
  IpoCollection collect_ipo(FiniteRing const& r);

  //! Raised when a product of two IPO elements is not itself in IPO.
  class ClosureViolation : public InternalError {
   public:
    ClosureViolation(ElementSet a, ElementSet b);
    ElementSet const& left() const noexcept {
      return a_;
    }
    ElementSet const& right() const noexcept {
      return b_;
    }

   private:
    ElementSet a_;
    ElementSet b_;
  };

  //! IPO(R) with its full Cayley table. Throws ClosureViolation if the
  //! collection is not closed under the ideal product.
  FiniteSemigroupWithZero build_ipo(FiniteRing const& r);
  FiniteSemigroupWithZero build_ipo(FiniteRing const& r,
                                    IpoCollection const& ipo);

  //! Zero-product relation of IPO(R) without building the Cayley table.
  Adjacency ipo_zero_products(FiniteRing const& r, IpoCollection const& ipo);

}  // namespace zdg

#endif  // ZDGRAPH_SEMIGROUP_HPP_

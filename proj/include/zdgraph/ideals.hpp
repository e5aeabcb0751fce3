#ifndef ZDGRAPH_IDEALS_HPP_
#define ZDGRAPH_IDEALS_HPP_

#include <vector>

#include "zdgraph/additive_span.hpp"
#include "zdgraph/element_set.hpp"
#include "zdgraph/ring.hpp"

namespace zdg {

  //! A left and/or right ideal, with additive generators.
  struct OneSidedIdeal {
    ElementSet           set;
    std::vector<Element> generators;
    bool                 is_left  = false;
    bool                 is_right = false;

    bool two_sided() const noexcept {
      return is_left && is_right;
    }
  };

  //! Smallest additive subgroup containing seed and 0.
  ElementSet additive_closure(FiniteRing const& r, ElementSet const& seed);

  //! Rx, flagged two-sided when it also absorbs right multiplication.
  OneSidedIdeal principal_left_ideal(FiniteRing const& r, Element x);
  //! xR, flagged two-sided when it also absorbs left multiplication.
  OneSidedIdeal principal_right_ideal(FiniteRing const& r, Element x);

  //! Every left (or right) ideal, sorted by bit-vector order.
  //!
  //! Built as the closure of the principal one-sided ideals under pairwise
  //! sums, which reaches every ideal because each one is a finite sum of
  //! principal ones.
  std::vector<OneSidedIdeal> enumerate_one_sided_ideals(FiniteRing const& r,
                                                        Side side);

  //! Additive span of {xy : x in a, y in b}; a and b must be additive
  //! subgroups.
  ElementSet ideal_product(FiniteRing const& r, ElementSet const& a,
                           ElementSet const& b);

  //! Same as above on subgroups that already carry generators.
  Subgroup ideal_product(FiniteRing const& r, Subgroup const& a,
                         Subgroup const& b);

  //! {a : a y = 0 for all y in x}, a left ideal.
  ElementSet left_annihilator(FiniteRing const& r, ElementSet const& x);
  //! {a : y a = 0 for all y in x}, a right ideal.
  ElementSet right_annihilator(FiniteRing const& r, ElementSet const& x);

  bool is_additive_subgroup(FiniteRing const& r, ElementSet const& s);
  bool is_left_ideal(FiniteRing const& r, ElementSet const& s);
  bool is_right_ideal(FiniteRing const& r, ElementSet const& s);

}  // namespace zdg

#endif  // ZDGRAPH_IDEALS_HPP_

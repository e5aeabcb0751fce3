#ifndef ZDGRAPH_ADDITIVE_SPAN_HPP_
#define ZDGRAPH_ADDITIVE_SPAN_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "zdgraph/element_set.hpp"

namespace zdg {

  class FiniteRing;

  //! An additive subgroup of a finite ring together with the generators that
  //! produced it.
  struct Subgroup {
    ElementSet           set;
    std::vector<Element> generators;
  };

  //! Grows an additive subgroup one generator at a time.
  //!
  //! Adding g to H enumerates the cosets H + jg for j = 1..t-1 where t is the
  //! order of g modulo H, so each element of the final group is produced
  //! exactly once and the cost is linear in the size of the result.
  class AdditiveSpan {
   public:
    explicit AdditiveSpan(FiniteRing const& r);

    //! Returns true if g was not already in the span.
    bool extend(Element g);
    void extend(std::span<Element const> gens) {
      for (Element g : gens) {
        extend(g);
      }
    }

    bool contains(Element x) const noexcept {
      return set_.contains(x);
    }
    std::size_t size() const noexcept {
      return members_.size();
    }
    ElementSet const& set() const noexcept {
      return set_;
    }
    std::vector<Element> const& generators() const noexcept {
      return generators_;
    }
    Subgroup release() && {
      return Subgroup{std::move(set_), std::move(generators_)};
    }

   private:
    FiniteRing const*    ring_;
    ElementSet           set_;
    std::vector<Element> members_;
    std::vector<Element> generators_;
  };

  //! Subgroup generated by `gens` (always contains 0).
  Subgroup span_of(FiniteRing const& r, std::span<Element const> gens);

  //! Generators for a set already known to be an additive subgroup.
  Subgroup as_subgroup(FiniteRing const& r, ElementSet const& subgroup);

}  // namespace zdg

#endif  // ZDGRAPH_ADDITIVE_SPAN_HPP_

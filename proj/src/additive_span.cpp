#include "zdgraph/additive_span.hpp"

#include "zdgraph/error.hpp"
#include "zdgraph/ring.hpp"

namespace zdg {

  AdditiveSpan::AdditiveSpan(FiniteRing const& r)
      : ring_(&r), set_(r.order()), members_{0} {
    set_.insert(0);
  }

  bool AdditiveSpan::extend(Element g) {
    if (set_.contains(g)) {
      return false;
    }
    FiniteRing const& r = *ring_;
    // Multiples g, 2g, ... up to the first one landing back in H.
    std::vector<Element> multiples;
    Element              m = g;
    while (!set_.contains(m)) {
      if (multiples.size() >= r.order()) {
        throw InternalError("additive structure is not a group");
      }
      multiples.push_back(m);
      m = r.add(m, g);
    }
    std::size_t const old = members_.size();
    members_.reserve(old * (multiples.size() + 1));
    for (Element jg : multiples) {
      for (std::size_t i = 0; i < old; ++i) {
        Element x = r.add(members_[i], jg);
        set_.insert(x);
        members_.push_back(x);
      }
    }
    generators_.push_back(g);
    return true;
  }

  Subgroup span_of(FiniteRing const& r, std::span<Element const> gens) {
    AdditiveSpan span(r);
    span.extend(gens);
    return std::move(span).release();
  }

  Subgroup as_subgroup(FiniteRing const& r, ElementSet const& subgroup) {
    AdditiveSpan span(r);
    subgroup.for_each([&span](Element x) { span.extend(x); });
    return std::move(span).release();
  }

}  // namespace zdg

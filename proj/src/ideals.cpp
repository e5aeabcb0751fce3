#include "zdgraph/ideals.hpp"

#include <algorithm>
#include <unordered_set>

#include "zdgraph/kernels.hpp"

namespace zdg {

  namespace {

    // Absorption of multiplication by R on one side, tested on additive
    // generators of both R and the subgroup (enough by bilinearity).
    bool absorbs(FiniteRing const& r, Subgroup const& s, Side side) {
      for (Element g : s.generators) {
        for (Element t : r.additive_generators()) {
          Element p = side == Side::left ? r.mul(t, g) : r.mul(g, t);
          if (!s.set.contains(p)) {
            return false;
          }
        }
      }
      return true;
    }

    OneSidedIdeal make_ideal(FiniteRing const& r, Subgroup s, Side side) {
      OneSidedIdeal out;
      out.is_left    = side == Side::left || absorbs(r, s, Side::left);
      out.is_right   = side == Side::right || absorbs(r, s, Side::right);
      out.set        = std::move(s.set);
      out.generators = std::move(s.generators);
      return out;
    }

    OneSidedIdeal principal(FiniteRing const& r, Element x, Side side) {
      std::vector<Element> images;
      for (Element t : r.additive_generators()) {
        images.push_back(side == Side::left ? r.mul(t, x) : r.mul(x, t));
      }
      return make_ideal(r, span_of(r, images), side);
    }

    ElementSet annihilator(FiniteRing const& r, ElementSet const& x,
                           Side side) {
      auto const gens = as_subgroup(r, x).generators;
      ElementSet out(r.order());
      for (Element a = 0; a < r.order(); ++a) {
        bool kills = std::all_of(gens.begin(), gens.end(), [&](Element y) {
          return (side == Side::left ? r.mul(a, y) : r.mul(y, a)) == 0;
        });
        if (kills) {
          out.insert(a);
        }
      }
      return out;
    }

  }  // namespace

  ElementSet additive_closure(FiniteRing const& r, ElementSet const& seed) {
    return as_subgroup(r, seed).set;
  }

  OneSidedIdeal principal_left_ideal(FiniteRing const& r, Element x) {
    return principal(r, x, Side::left);
  }

  OneSidedIdeal principal_right_ideal(FiniteRing const& r, Element x) {
    return principal(r, x, Side::right);
  }

  std::vector<OneSidedIdeal> enumerate_one_sided_ideals(FiniteRing const& r,
                                                        Side side) {
    std::vector<Subgroup> ideals = kernels::principal_ideals(r, side);
    std::unordered_set<ElementSet, ElementSetHash> seen;
    for (auto const& s : ideals) {
      seen.insert(s.set);
    }
    // Pairwise sums to a fixed point; new ideals are paired with all
    // earlier ones as they are appended.
    for (std::size_t i = 1; i < ideals.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (ideals[i].set.subset_of(ideals[j].set)
            || ideals[j].set.subset_of(ideals[i].set)) {
          continue;
        }
        AdditiveSpan sum(r);
        sum.extend(ideals[i].generators);
        sum.extend(ideals[j].generators);
        if (seen.insert(sum.set()).second) {
          ideals.push_back(std::move(sum).release());
        }
      }
    }
    std::vector<OneSidedIdeal> out;
    out.reserve(ideals.size());
    for (auto& s : ideals) {
      out.push_back(make_ideal(r, std::move(s), side));
    }
    std::sort(out.begin(), out.end(),
              [](OneSidedIdeal const& a, OneSidedIdeal const& b) {
                return a.set < b.set;
              });
    return out;
  }

  ElementSet ideal_product(FiniteRing const& r, ElementSet const& a,
                           ElementSet const& b) {
    return ideal_product(r, as_subgroup(r, a), as_subgroup(r, b)).set;
  }

  Subgroup ideal_product(FiniteRing const& r, Subgroup const& a,
                         Subgroup const& b) {
    return kernels::ideal_product(r, a.generators, b.generators);
  }

  ElementSet left_annihilator(FiniteRing const& r, ElementSet const& x) {
    return annihilator(r, x, Side::left);
  }

  ElementSet right_annihilator(FiniteRing const& r, ElementSet const& x) {
    return annihilator(r, x, Side::right);
  }

  bool is_additive_subgroup(FiniteRing const& r, ElementSet const& s) {
    return s.contains(0) && as_subgroup(r, s).set == s;
  }

  bool is_left_ideal(FiniteRing const& r, ElementSet const& s) {
    if (!is_additive_subgroup(r, s)) {
      return false;
    }
    return absorbs(r, as_subgroup(r, s), Side::left);
  }

  bool is_right_ideal(FiniteRing const& r, ElementSet const& s) {
    if (!is_additive_subgroup(r, s)) {
      return false;
    }
    return absorbs(r, as_subgroup(r, s), Side::right);
  }

}  // namespace zdg

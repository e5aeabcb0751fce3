#include <algorithm>
#include <vector>

#include "zdgraph/additive_span.hpp"
#include "zdgraph/error.hpp"
#include "zdgraph/ideals.hpp"
#include "zdgraph/ring.hpp"

namespace zdg {

  namespace {
    void require_nonzero_ring(FiniteRing const& r, char const* op) {
      if (r.is_zero_ring()) {
        throw InvalidArgument(std::string(op) + " is undefined on the zero ring");
      }
    }

    ElementSet collect(std::size_t n, std::vector<char> const& flags) {
      ElementSet out(n);
      for (std::size_t i = 0; i < n; ++i) {
        if (flags[i]) {
          out.insert(static_cast<Element>(i));
        }
      }
      return out;
    }
  }  // namespace

  ElementSet element_zero_divisors(FiniteRing const& r) {
    std::size_t const n = r.order();
    std::vector<char> zd(n, 0);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::size_t a = 0; a < n; ++a) {
      for (Element b = 1; b < n; ++b) {
        if (r.mul(static_cast<Element>(a), b) == 0
            || r.mul(b, static_cast<Element>(a)) == 0) {
          zd[a] = 1;
          break;
        }
      }
    }
    return collect(n, zd);
  }

  ElementSet units(FiniteRing const& r) {
    std::size_t const n = r.order();
    std::vector<char> unit(n, 0);
    Element const     one = r.one();
#pragma omp parallel for schedule(dynamic, 16)
    for (std::size_t a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (r.mul(static_cast<Element>(a), b) == one
            && r.mul(b, static_cast<Element>(a)) == one) {
          unit[a] = 1;
          break;
        }
      }
    }
    return collect(n, unit);
  }

  bool is_division_ring(FiniteRing const& r) {
    require_nonzero_ring(r, "is_division_ring");
    return units(r).count() == r.order() - 1;
  }

  std::vector<Element> central_idempotents(FiniteRing const& r) {
    std::vector<Element> out;
    auto const           gens = r.additive_generators();
    for (Element e = 0; e < r.order(); ++e) {
      if (r.mul(e, e) != e) {
        continue;
      }
      // Commuting with additive generators suffices by bilinearity.
      bool central = std::all_of(gens.begin(), gens.end(), [&](Element t) {
        return r.mul(e, t) == r.mul(t, e);
      });
      if (central) {
        out.push_back(e);
      }
    }
    return out;
  }

  LocalRingInfo is_local_ring(FiniteRing const& r) {
    require_nonzero_ring(r, "is_local_ring");
    ElementSet nonunits = units(r);
    nonunits            = ElementSet::full(r.order()).subtract(nonunits);

    AdditiveSpan span(r);
    nonunits.for_each([&span](Element x) { span.extend(x); });
    if (span.size() != nonunits.count()) {
      return {};
    }
    auto const gens    = r.additive_generators();
    bool       ideal   = true;
    auto const members = nonunits.elements();
    for (std::size_t i = 0; i < members.size() && ideal; ++i) {
      for (Element t : gens) {
        if (!nonunits.contains(r.mul(t, members[i]))
            || !nonunits.contains(r.mul(members[i], t))) {
          ideal = false;
          break;
        }
      }
    }
    if (!ideal) {
      return {};
    }
    return LocalRingInfo{true, std::move(nonunits)};
  }

  ElementSet jacobson_radical(FiniteRing const& r, Side side) {
    require_nonzero_ring(r, "jacobson_radical");
    auto const ideals = enumerate_one_sided_ideals(r, side);
    ElementSet full   = r.all();
    ElementSet radical = full;
    for (auto const& candidate : ideals) {
      if (candidate.set == full) {
        continue;
      }
      bool maximal = std::none_of(
          ideals.begin(), ideals.end(), [&](OneSidedIdeal const& other) {
            return other.set != full && other.set != candidate.set
                   && candidate.set.subset_of(other.set);
          });
      if (maximal) {
        radical &= candidate.set;
      }
    }
    return radical;
  }

}  // namespace zdg

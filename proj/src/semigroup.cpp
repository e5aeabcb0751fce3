#include "zdgraph/semigroup.hpp"

#include <algorithm>
#include <optional>

namespace zdg {

  FiniteSemigroupWithZero::FiniteSemigroupWithZero(
      std::size_t m, std::vector<Element> table,
      std::vector<ElementSet> label_sets)
      : m_(m), table_(std::move(table)), label_sets_(std::move(label_sets)) {
    if (m == 0 || table_.size() != m * m) {
      throw InvalidArgument("semigroup table must be square and non-empty");
    }
    if (!label_sets_.empty() && label_sets_.size() != m) {
      throw InvalidArgument("one label set per semigroup element expected");
    }
  }

  std::string FiniteSemigroupWithZero::label(Element a) const {
    return has_label_sets() ? label_sets_[a].to_string() : std::to_string(a);
  }

  FiniteSemigroupWithZero semigroup_from_table(std::size_t          m,
                                               std::vector<Element> table,
                                               Element zero_index) {
    if (m == 0 || table.size() != m * m) {
      throw InvalidArgument("semigroup table must be square and non-empty");
    }
    if (zero_index >= m) {
      throw InvalidArgument("zero index out of range");
    }
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (table[i] >= m) {
        throw AxiomError("table entry out of range", {i / m, i % m});
      }
    }
    for (Element x = 0; x < m; ++x) {
      if (table[zero_index * m + x] != zero_index
          || table[x * m + zero_index] != zero_index) {
        throw AxiomError("zero is not absorbing", {zero_index, x});
      }
    }
    for (std::size_t x = 0; x < m; ++x) {
      for (std::size_t y = 0; y < m; ++y) {
        std::size_t xy = table[x * m + y];
        for (std::size_t z = 0; z < m; ++z) {
          if (table[xy * m + z] != table[x * m + table[y * m + z]]) {
            throw AxiomError("multiplication is not associative", {x, y, z});
          }
        }
      }
    }
    if (zero_index != 0) {
      auto relabel = [z = zero_index](Element x) -> Element {
        return x == z ? 0 : (x == 0 ? z : x);
      };
      std::vector<Element> renamed(m * m);
      for (Element x = 0; x < m; ++x) {
        for (Element y = 0; y < m; ++y) {
          renamed[relabel(x) * m + relabel(y)] = relabel(table[x * m + y]);
        }
      }
      table = std::move(renamed);
    }
    return FiniteSemigroupWithZero(m, std::move(table));
  }

  FiniteSemigroupWithZero semigroup_from_table(
      std::vector<std::vector<Element>> const& rows, Element zero_index) {
    std::size_t const    m = rows.size();
    std::vector<Element> flat;
    flat.reserve(m * m);
    for (auto const& row : rows) {
      if (row.size() != m) {
        throw InvalidArgument("semigroup table must be square");
      }
      flat.insert(flat.end(), row.begin(), row.end());
    }
    return semigroup_from_table(m, std::move(flat), zero_index);
  }

  Adjacency zero_products(FiniteSemigroupWithZero const& s) {
    return reference::zero_products_from_table(s.order(), s.table());
  }

  AnnSets ann_sets(Adjacency const& zp) {
    std::size_t const m = zp.size();
    AnnSets           out{ElementSet(m), ElementSet(m), ElementSet(m)};
    ElementSet        nonzero = ElementSet::full(m);
    nonzero.erase(0);
    for (Element a = 1; a < m; ++a) {
      for (Element b = 1; b < m; ++b) {
        if (zp[a].contains(b) || zp[b].contains(a)) {
          out.d_star.insert(a);
          break;
        }
      }
    }
    for (Element a = 1; a < m; ++a) {
      if (!out.d_star.contains(a)) {
        continue;
      }
      if (zp[a].intersects(out.d_star)) {
        out.a_right.insert(a);  // a b = 0 for some b in D(S)*
      }
      for (Element b = 1; b < m; ++b) {
        if (out.d_star.contains(b) && zp[b].contains(a)) {
          out.a_left.insert(a);  // b a = 0
          break;
        }
      }
    }
    return out;
  }

  AnnSets ann_sets(FiniteSemigroupWithZero const& s) {
    return ann_sets(zero_products(s));
  }

  std::vector<FiniteSemigroupWithZero> enumerate_semigroups_with_zero(
      std::size_t order) {
    if (order < 2 || order > 4) {
      throw InvalidArgument("exhaustive enumeration supports orders 2..4, got "
                            + std::to_string(order));
    }
    std::vector<FiniteSemigroupWithZero> out;
    for (auto const& code : kernels::associative_tables(order)) {
      out.emplace_back(order, expand_table_code(order, code));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // IPO(R)
  ////////////////////////////////////////////////////////////////////////

  Element IpoCollection::find(ElementSet const& s) const {
    auto it = index.find(s);
    return it == index.end() ? static_cast<Element>(size()) : it->second;
  }

  std::vector<ElementSet> IpoCollection::label_sets() const {
    std::vector<ElementSet> out;
    out.reserve(elements.size());
    for (auto const& e : elements) {
      out.push_back(e.set);
    }
    return out;
  }

  IpoCollection collect_ipo(FiniteRing const& r) {
    IpoCollection ipo;
    ipo.left_ideals  = enumerate_one_sided_ideals(r, Side::left);
    ipo.right_ideals = enumerate_one_sided_ideals(r, Side::right);

    // Factors: the union of both lists, two-sided ideals once.
    std::vector<Subgroup> factors;
    std::unordered_map<ElementSet, Element, ElementSetHash> seen_factor;
    for (auto const* list : {&ipo.left_ideals, &ipo.right_ideals}) {
      for (auto const& ideal : *list) {
        if (seen_factor.emplace(ideal.set, 0).second) {
          factors.push_back(Subgroup{ideal.set, ideal.generators});
        }
      }
    }

    std::size_t const     f = factors.size();
    std::vector<Subgroup> products(f * f);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t i = 0; i < f; ++i) {
      for (std::size_t j = 0; j < f; ++j) {
        products[i * f + j] = kernels::ideal_product(
            r, factors[i].generators, factors[j].generators);
      }
    }
    for (auto& p : products) {
      if (ipo.index.emplace(p.set, 0).second) {
        ipo.elements.push_back(std::move(p));
      }
    }
    std::sort(ipo.elements.begin(), ipo.elements.end(),
              [](Subgroup const& a, Subgroup const& b) { return a.set < b.set; });
    for (std::size_t i = 0; i < ipo.elements.size(); ++i) {
      ipo.index[ipo.elements[i].set] = static_cast<Element>(i);
    }
    if (ipo.elements.empty() || ipo.elements.front().set != r.zero_set()) {
      throw InternalError("the zero ideal is missing from IPO(R)");
    }
    return ipo;
  }

  ClosureViolation::ClosureViolation(ElementSet a, ElementSet b)
      : InternalError("IPO(R) is not closed: the product of " + a.to_string()
                      + " and " + b.to_string() + " is not in IPO(R)"),
        a_(std::move(a)),
        b_(std::move(b)) {}

  FiniteSemigroupWithZero build_ipo(FiniteRing const& r) {
    return build_ipo(r, collect_ipo(r));
  }

  FiniteSemigroupWithZero build_ipo(FiniteRing const&    r,
                                    IpoCollection const& ipo) {
    std::optional<std::pair<Element, Element>> missing;
    auto table = kernels::ideal_cayley_table(r, ipo.elements, ipo.index, missing);
    if (missing) {
      throw ClosureViolation(ipo.elements[missing->first].set,
                             ipo.elements[missing->second].set);
    }
    return FiniteSemigroupWithZero(ipo.size(), std::move(table),
                                   ipo.label_sets());
  }

  Adjacency ipo_zero_products(FiniteRing const& r, IpoCollection const& ipo) {
    return kernels::zero_products(r, ipo.elements);
  }

}  // namespace zdg

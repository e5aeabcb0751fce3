#ifndef ZDGRAPH_TESTS_ORACLES_HPP_
#define ZDGRAPH_TESTS_ORACLES_HPP_

// Brute-force oracles for the test suite. Nothing here calls into the
// library's spans, ideal enumeration, BFS or semigroup generator; the only
// shared dependency is FiniteRing::add/mul, whose tables are themselves
// checked against the plain arithmetic below.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "zdgraph/element_set.hpp"
#include "zdgraph/kernels.hpp"
#include "zdgraph/ring.hpp"

namespace oracle {

  using zdg::Element;
  using Set = std::vector<Element>;  // sorted

  // Plain arithmetic -----------------------------------------------------

  struct PlainRing {
    std::size_t          n = 0;
    std::vector<Element> add, mul;
    Element              one = 0;
  };

  inline PlainRing cyclic(std::size_t n) {
    PlainRing r{n, std::vector<Element>(n * n), std::vector<Element>(n * n),
                static_cast<Element>(1 % n)};
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        r.add[a * n + b] = static_cast<Element>((a + b) % n);
        r.mul[a * n + b] = static_cast<Element>((a * b) % n);
      }
    }
    return r;
  }

  inline PlainRing product(PlainRing const& x, PlainRing const& y) {
    std::size_t const n = x.n * y.n;
    PlainRing         r{n, std::vector<Element>(n * n), std::vector<Element>(n * n),
                static_cast<Element>(x.one * y.n + y.one)};
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        std::size_t a1 = a / y.n, a2 = a % y.n, b1 = b / y.n, b2 = b % y.n;
        r.add[a * n + b] = static_cast<Element>(x.add[a1 * x.n + b1] * y.n
                                                + y.add[a2 * y.n + b2]);
        r.mul[a * n + b] = static_cast<Element>(x.mul[a1 * x.n + b1] * y.n
                                                + y.mul[a2 * y.n + b2]);
      }
    }
    return r;
  }

  // Index of a 2x2 matrix [[p, q], [s, t]] over a base of order b: p is the
  // most significant digit.
  inline std::size_t mat2_index(std::size_t b, std::size_t p, std::size_t q,
                                std::size_t s, std::size_t t) {
    return ((p * b + q) * b + s) * b + t;
  }

  // Single matrix product over Z_m, straight from the definition.
  inline std::size_t mat2_mul_mod(std::size_t m, std::size_t x, std::size_t y) {
    std::size_t xd[4], yd[4];
    for (int i = 3; i >= 0; --i) {
      xd[i] = x % m;
      x /= m;
      yd[i] = y % m;
      y /= m;
    }
    std::size_t p = (xd[0] * yd[0] + xd[1] * yd[2]) % m;
    std::size_t q = (xd[0] * yd[1] + xd[1] * yd[3]) % m;
    std::size_t s = (xd[2] * yd[0] + xd[3] * yd[2]) % m;
    std::size_t t = (xd[2] * yd[1] + xd[3] * yd[3]) % m;
    return mat2_index(m, p, q, s, t);
  }

  inline std::size_t mat2_add_mod(std::size_t m, std::size_t x, std::size_t y) {
    std::size_t out = 0, scale = 1;
    for (int i = 0; i < 4; ++i) {
      out += ((x % m + y % m) % m) * scale;
      x /= m;
      y /= m;
      scale *= m;
    }
    return out;
  }

  inline PlainRing mat2(std::size_t m) {
    std::size_t const n = m * m * m * m;
    PlainRing         r{n, std::vector<Element>(n * n), std::vector<Element>(n * n),
                static_cast<Element>(mat2_index(m, 1 % m, 0, 0, 1 % m))};
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        r.add[a * n + b] = static_cast<Element>(mat2_add_mod(m, a, b));
        r.mul[a * n + b] = static_cast<Element>(mat2_mul_mod(m, a, b));
      }
    }
    return r;
  }

  inline bool same_tables(zdg::FiniteRing const& r, PlainRing const& p) {
    if (r.order() != p.n || r.one() != p.one) {
      return false;
    }
    for (Element a = 0; a < p.n; ++a) {
      for (Element b = 0; b < p.n; ++b) {
        if (r.add(a, b) != p.add[a * p.n + b] || r.mul(a, b) != p.mul[a * p.n + b]) {
          return false;
        }
      }
    }
    return true;
  }

  //! Ring isomorphism r1 -> r2 by permutation search (0 fixed); small n.
  inline std::optional<std::vector<Element>> find_isomorphism(
      zdg::FiniteRing const& r1, zdg::FiniteRing const& r2) {
    std::size_t const n = r1.order();
    if (n != r2.order()) {
      return std::nullopt;
    }
    std::vector<Element> f(n);
    std::iota(f.begin(), f.end(), 0);
    do {
      bool ok = true;
      for (Element a = 0; a < n && ok; ++a) {
        for (Element b = 0; b < n && ok; ++b) {
          ok = f[r1.add(a, b)] == r2.add(f[a], f[b])
               && f[r1.mul(a, b)] == r2.mul(f[a], f[b]);
        }
      }
      if (ok) {
        return f;
      }
    } while (std::next_permutation(f.begin() + 1, f.end()));
    return std::nullopt;
  }

  // Sets -------------------------------------------------------------------

  inline Set to_set(zdg::ElementSet const& s) {
    return s.elements();
  }

  //! Fixed point of pairwise sums starting from seed plus 0.
  inline Set naive_span(zdg::FiniteRing const& r, Set seed) {
    std::set<Element> s(seed.begin(), seed.end());
    s.insert(0);
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<Element> cur(s.begin(), s.end());
      for (Element a : cur) {
        for (Element b : cur) {
          grew |= s.insert(r.add(a, b)).second;
        }
      }
    }
    return {s.begin(), s.end()};
  }

  inline Set naive_product(zdg::FiniteRing const& r, Set const& a, Set const& b) {
    Set prods;
    for (Element x : a) {
      for (Element y : b) {
        prods.push_back(r.mul(x, y));
      }
    }
    return naive_span(r, prods);
  }

  //! Every left (or right) ideal by scanning all subsets containing 0.
  inline std::set<Set> subset_scan_ideals(zdg::FiniteRing const& r, bool left) {
    std::size_t const n = r.order();
    std::set<Set>     out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); mask += 2) {
      auto in = [mask](Element x) { return (mask >> x) & 1U; };
      bool ok = true;
      for (Element x = 0; x < n && ok; ++x) {
        if (!in(x)) {
          continue;
        }
        for (Element y = 0; y < n && ok; ++y) {
          if (in(y) && !in(r.add(x, y))) {
            ok = false;
          }
          if (ok && !in(left ? r.mul(y, x) : r.mul(x, y))) {
            ok = false;
          }
        }
      }
      if (ok) {
        Set s;
        for (Element x = 0; x < n; ++x) {
          if (in(x)) {
            s.push_back(x);
          }
        }
        out.insert(s);
      }
    }
    return out;
  }

  // Graphs -----------------------------------------------------------------

  inline constexpr std::size_t unreachable = std::numeric_limits<std::size_t>::max();

  inline std::vector<std::vector<std::size_t>> floyd_warshall(zdg::Adjacency const& adj) {
    std::size_t const v = adj.size();
    std::vector<std::vector<std::size_t>> d(v, std::vector<std::size_t>(v, unreachable));
    for (std::size_t i = 0; i < v; ++i) {
      d[i][i] = 0;
      for (std::size_t j = 0; j < v; ++j) {
        if (i != j && adj[i].contains(static_cast<Element>(j))) {
          d[i][j] = 1;
        }
      }
    }
    for (std::size_t k = 0; k < v; ++k) {
      for (std::size_t i = 0; i < v; ++i) {
        for (std::size_t j = 0; j < v; ++j) {
          if (d[i][k] != unreachable && d[k][j] != unreachable) {
            d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
          }
        }
      }
    }
    return d;
  }

  //! (all reachable, max distance) over ordered pairs of distinct vertices.
  inline std::pair<bool, std::size_t> fw_summary(zdg::Adjacency const& adj) {
    auto const  d   = floyd_warshall(adj);
    bool        all = true;
    std::size_t mx  = 0;
    for (std::size_t i = 0; i < adj.size(); ++i) {
      for (std::size_t j = 0; j < adj.size(); ++j) {
        if (i == j) {
          continue;
        }
        if (d[i][j] == unreachable) {
          all = false;
        } else {
          mx = std::max(mx, d[i][j]);
        }
      }
    }
    return {all, mx};
  }

  //! Shortest simple cycle by enumerating all simple paths; 0 when acyclic.
  inline std::size_t all_cycles_girth(zdg::Adjacency const& adj) {
    std::size_t const v    = adj.size();
    std::size_t       best = 0;
    std::vector<bool> on(v, false);
    std::function<void(std::size_t, std::size_t, std::size_t)> dfs =
        [&](std::size_t start, std::size_t u, std::size_t len) {
          for (std::size_t w = 0; w < v; ++w) {
            if (!adj[u].contains(static_cast<Element>(w))) {
              continue;
            }
            if (w == start && len >= 3) {
              best = best == 0 ? len : std::min(best, len);
            } else if (w > start && !on[w]) {
              on[w] = true;
              dfs(start, w, len + 1);
              on[w] = false;
            }
          }
        };
    for (std::size_t s = 0; s < v; ++s) {
      on[s] = true;
      dfs(s, s, 1);
      on[s] = false;
    }
    return best;
  }

  inline zdg::Adjacency random_graph(std::size_t v, double p, bool symmetric,
                                     std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    zdg::Adjacency              adj(v, zdg::ElementSet(v));
    for (std::size_t i = 0; i < v; ++i) {
      for (std::size_t j = symmetric ? i + 1 : 0; j < v; ++j) {
        if (i != j && coin(rng)) {
          adj[i].insert(static_cast<Element>(j));
          if (symmetric) {
            adj[j].insert(static_cast<Element>(i));
          }
        }
      }
    }
    return adj;
  }

  // Semigroups -------------------------------------------------------------

  //! Every associative m x m table with row and column 0 zero, in
  //! lexicographic order of the free cells (first cell most significant).
  inline std::vector<std::vector<Element>> naive_semigroups(std::size_t m) {
    std::size_t const cells = (m - 1) * (m - 1);
    std::size_t       total = 1;
    for (std::size_t i = 0; i < cells; ++i) {
      total *= m;
    }
    std::vector<std::vector<Element>> out;
    std::vector<Element>              t(m * m, 0);
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t c = code;
      for (std::size_t cell = cells; cell-- > 0;) {
        std::size_t row = 1 + cell / (m - 1), col = 1 + cell % (m - 1);
        t[row * m + col] = static_cast<Element>(c % m);
        c /= m;
      }
      bool assoc = true;
      for (std::size_t x = 0; x < m && assoc; ++x) {
        for (std::size_t y = 0; y < m && assoc; ++y) {
          for (std::size_t z = 0; z < m && assoc; ++z) {
            assoc = t[t[x * m + y] * m + z] == t[x * m + t[y * m + z]];
          }
        }
      }
      if (assoc) {
        out.push_back(t);
      }
    }
    return out;
  }

}  // namespace oracle

#endif  // ZDGRAPH_TESTS_ORACLES_HPP_

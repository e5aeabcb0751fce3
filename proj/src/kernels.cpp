#include "zdgraph/kernels.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <unordered_set>

namespace zdg {

  namespace {

    constexpr std::size_t unvisited = std::numeric_limits<std::size_t>::max();

    std::size_t ipow(std::size_t b, std::size_t e) {
      std::size_t v = 1;
      while (e-- > 0) {
        v *= b;
      }
      return v;
    }

    TableCode decode_code(std::size_t m, std::size_t index) {
      std::size_t const f = (m - 1) * (m - 1);
      TableCode         code(f);
      for (std::size_t i = f; i-- > 0;) {
        code[i] = static_cast<Element>(index % m);
        index /= m;
      }
      return code;
    }

    // Per-source BFS result for distance_summary.
    struct SourceSweep {
      std::size_t eccentricity     = 0;
      std::size_t farthest         = 0;
      std::size_t first_unreached  = unvisited;
    };

  }  // namespace

  std::vector<Element> expand_table_code(std::size_t m, TableCode const& code) {
    std::vector<Element> table(m * m, 0);
    for (std::size_t x = 1; x < m; ++x) {
      for (std::size_t y = 1; y < m; ++y) {
        table[x * m + y] = code[(x - 1) * (m - 1) + (y - 1)];
      }
    }
    return table;
  }

  namespace kernels {

    std::vector<Subgroup> principal_ideals(FiniteRing const& r, Side side) {
      std::size_t const n    = r.order();
      auto const        gens = r.additive_generators();
      std::vector<Subgroup>                            out;
      std::unordered_set<ElementSet, ElementSetHash> seen;
      constexpr std::size_t                          block = 512;
      std::vector<Subgroup>                          batch(block);
      for (std::size_t start = 0; start < n; start += block) {
        std::size_t const stop = std::min(n, start + block);
#pragma omp parallel for schedule(dynamic, 8)
        for (std::size_t x = start; x < stop; ++x) {
          std::vector<Element> images;
          images.reserve(gens.size());
          for (Element t : gens) {
            images.push_back(side == Side::left
                                 ? r.mul(t, static_cast<Element>(x))
                                 : r.mul(static_cast<Element>(x), t));
          }
          batch[x - start] = span_of(r, images);
        }
        for (std::size_t x = start; x < stop; ++x) {
          if (seen.insert(batch[x - start].set).second) {
            out.push_back(std::move(batch[x - start]));
          }
        }
      }
      return out;
    }

    Subgroup ideal_product(FiniteRing const& r, std::span<Element const> a,
                           std::span<Element const> b) {
      AdditiveSpan span(r);
      for (Element g : a) {
        for (Element h : b) {
          span.extend(r.mul(g, h));
        }
      }
      return std::move(span).release();
    }

    bool product_vanishes(FiniteRing const& r, std::span<Element const> a,
                          std::span<Element const> b) {
      for (Element g : a) {
        for (Element h : b) {
          if (r.mul(g, h) != 0) {
            return false;
          }
        }
      }
      return true;
    }

    Adjacency zero_products(FiniteRing const&            r,
                            std::vector<Subgroup> const& elements) {
      std::size_t const m = elements.size();
      Adjacency         rows(m, ElementSet(m));
#pragma omp parallel for schedule(dynamic, 4)
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
          if (product_vanishes(r, elements[a].generators,
                               elements[b].generators)) {
            rows[a].insert(static_cast<Element>(b));
          }
        }
      }
      return rows;
    }

    std::vector<Element> ideal_cayley_table(
        FiniteRing const& r, std::vector<Subgroup> const& elements,
        std::unordered_map<ElementSet, Element, ElementSetHash> const& index,
        std::optional<std::pair<Element, Element>>& missing) {
      std::size_t const    m = elements.size();
      std::vector<Element> table(m * m, static_cast<Element>(m));
#pragma omp parallel for schedule(dynamic, 1)
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
          auto product = ideal_product(r, elements[a].generators,
                                       elements[b].generators);
          auto it      = index.find(product.set);
          if (it != index.end()) {
            table[a * m + b] = it->second;
          }
        }
      }
      missing.reset();
      for (std::size_t i = 0; i < table.size(); ++i) {
        if (table[i] == m) {
          missing = std::pair{static_cast<Element>(i / m),
                              static_cast<Element>(i % m)};
          break;
        }
      }
      return table;
    }

    DistanceSummary distance_summary(Adjacency const& adj) {
      std::size_t const        v = adj.size();
      std::vector<SourceSweep> sweeps(v);
#pragma omp parallel for schedule(dynamic, 1)
      for (std::size_t s = 0; s < v; ++s) {
        ElementSet visited = ElementSet::singleton(v, static_cast<Element>(s));
        ElementSet frontier = visited;
        std::size_t depth   = 0;
        SourceSweep sweep;
        while (true) {
          ElementSet next(v);
          frontier.for_each([&](Element x) { next |= adj[x]; });
          next.subtract(visited);
          if (next.none()) {
            break;
          }
          ++depth;
          visited |= next;
          sweep.eccentricity = depth;
          sweep.farthest     = next.first();
          frontier           = std::move(next);
        }
        if (visited.count() != v) {
          ElementSet missing = ElementSet::full(v);
          missing.subtract(visited);
          sweep.first_unreached = missing.first();
        }
        sweeps[s] = sweep;
      }
      DistanceSummary out;
      for (std::size_t s = 0; s < v; ++s) {
        if (sweeps[s].first_unreached != unvisited) {
          return DistanceSummary{false, 0, {s, sweeps[s].first_unreached}};
        }
        if (sweeps[s].eccentricity > out.max_distance) {
          out.max_distance = sweeps[s].eccentricity;
          out.witness      = {s, sweeps[s].farthest};
        }
      }
      return out;
    }

    GirthResult girth(Adjacency const& adj) {
      std::size_t const v = adj.size();

      // Triangles: a common neighbour of an edge's endpoints.
      std::vector<std::vector<std::size_t>> found(v);
#pragma omp parallel for schedule(dynamic, 4)
      for (std::size_t u = 0; u < v; ++u) {
        for (std::size_t w = adj[u].next(u); w < v; w = adj[u].next(w)) {
          ElementSet common = adj[u];
          common &= adj[w];
          if (common.any()) {
            found[u] = {u, w, common.first()};
            break;
          }
        }
      }
      for (auto& c : found) {
        if (!c.empty()) {
          return {3, std::move(c)};
        }
      }

      // Squares: two vertices with two common neighbours.
#pragma omp parallel for schedule(dynamic, 4)
      for (std::size_t u = 0; u < v; ++u) {
        for (std::size_t w = u + 1; w < v; ++w) {
          if (adj[u].intersection_count(adj[w], 2) == 2) {
            ElementSet common = adj[u];
            common &= adj[w];
            std::size_t a = common.first();
            found[u]      = {u, a, w, common.next(a)};
            break;
          }
        }
      }
      for (auto& c : found) {
        if (!c.empty()) {
          return {4, std::move(c)};
        }
      }

      // Girth >= 5 or acyclic: the graph is sparse, use per-source BFS.
      struct Best {
        std::size_t length = unvisited, x = 0, y = 0;
      };
      std::vector<Best> best(v);
#pragma omp parallel for schedule(dynamic, 4)
      for (std::size_t s = 0; s < v; ++s) {
        std::vector<std::size_t> dist(v, unvisited), parent(v, unvisited);
        std::vector<std::size_t> queue{s};
        dist[s] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
          std::size_t x = queue[head];
          adj[x].for_each([&](Element y) {
            if (dist[y] == unvisited) {
              dist[y]   = dist[x] + 1;
              parent[y] = x;
              queue.push_back(y);
            } else if (parent[x] != y && x < y) {
              std::size_t len = dist[x] + dist[y] + 1;
              if (len < best[s].length) {
                best[s] = {len, x, y};
              }
            }
          });
        }
      }
      std::size_t src = unvisited;
      for (std::size_t s = 0; s < v; ++s) {
        if (best[s].length != unvisited
            && (src == unvisited || best[s].length < best[src].length)) {
          src = s;
        }
      }
      if (src == unvisited) {
        return {};
      }
      // Rebuild the tree from src to trace the cycle through (x, y).
      std::vector<std::size_t> dist(v, unvisited), parent(v, unvisited);
      std::vector<std::size_t> queue{src};
      dist[src] = 0;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        std::size_t x = queue[head];
        adj[x].for_each([&](Element y) {
          if (dist[y] == unvisited) {
            dist[y]   = dist[x] + 1;
            parent[y] = x;
            queue.push_back(y);
          }
        });
      }
      std::vector<std::size_t> left, right;
      for (std::size_t p = best[src].x; p != unvisited; p = parent[p]) {
        left.push_back(p);
      }
      for (std::size_t p = best[src].y; p != unvisited; p = parent[p]) {
        right.push_back(p);
      }
      // Drop the shared tail (common ancestors) but keep the branch point.
      while (left.size() > 1 && right.size() > 1
             && left[left.size() - 2] == right[right.size() - 2]) {
        left.pop_back();
        right.pop_back();
      }
      std::vector<std::size_t> cycle(left.rbegin(), left.rend());
      for (std::size_t i = 0; i + 1 < right.size(); ++i) {
        cycle.push_back(right[i]);
      }
      return {best[src].length, std::move(cycle)};
    }

    std::vector<TableCode> associative_tables(std::size_t m) {
      std::size_t const f     = (m - 1) * (m - 1);
      std::size_t const total = ipow(m, f);
      std::vector<char> ok(total, 0);
#pragma omp parallel for schedule(static)
      for (std::size_t index = 0; index < total; ++index) {
        // Decode in place: cell i is digit i, most significant first.
        Element     t[16];
        std::size_t c = index;
        for (std::size_t i = f; i-- > 0;) {
          t[i] = static_cast<Element>(c % m);
          c /= m;
        }
        auto at = [&](Element x, Element y) -> Element {
          return (x == 0 || y == 0) ? 0 : t[(x - 1) * (m - 1) + (y - 1)];
        };
        bool assoc = true;
        for (Element x = 1; x < m && assoc; ++x) {
          for (Element y = 1; y < m && assoc; ++y) {
            Element xy = at(x, y);
            for (Element z = 1; z < m; ++z) {
              if (at(xy, z) != at(x, at(y, z))) {
                assoc = false;
                break;
              }
            }
          }
        }
        ok[index] = assoc;
      }
      std::vector<TableCode> out;
      for (std::size_t index = 0; index < total; ++index) {
        if (ok[index]) {
          out.push_back(decode_code(m, index));
        }
      }
      return out;
    }

  }  // namespace kernels

  namespace reference {

    std::vector<Subgroup> principal_ideals(FiniteRing const& r, Side side) {
      std::vector<Subgroup>                            out;
      std::unordered_set<ElementSet, ElementSetHash> seen;
      for (Element x = 0; x < r.order(); ++x) {
        AdditiveSpan span(r);
        for (Element y = 0; y < r.order(); ++y) {
          span.extend(side == Side::left ? r.mul(y, x) : r.mul(x, y));
        }
        if (seen.insert(span.set()).second) {
          out.push_back(std::move(span).release());
        }
      }
      return out;
    }

    ElementSet ideal_product(FiniteRing const& r, ElementSet const& a,
                             ElementSet const& b) {
      // Plain fixed point: products, then pairwise sums and negations until
      // nothing new appears.
      ElementSet result = r.zero_set();
      a.for_each([&](Element x) {
        b.for_each([&](Element y) { result.insert(r.mul(x, y)); });
      });
      bool grew = true;
      while (grew) {
        grew         = false;
        auto members = result.elements();
        for (Element x : members) {
          grew |= result.insert_new(r.neg(x));
          for (Element y : members) {
            grew |= result.insert_new(r.add(x, y));
          }
        }
      }
      return result;
    }

    Adjacency zero_products_from_table(std::size_t              m,
                                       std::span<Element const> table) {
      Adjacency rows(m, ElementSet(m));
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
          if (table[a * m + b] == 0) {
            rows[a].insert(static_cast<Element>(b));
          }
        }
      }
      return rows;
    }

    DistanceSummary distance_summary(Adjacency const& adj) {
      std::size_t const v = adj.size();
      DistanceSummary   out;
      for (std::size_t s = 0; s < v; ++s) {
        std::vector<std::size_t> dist(v, unvisited);
        std::vector<std::size_t> queue{s};
        dist[s] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
          std::size_t x = queue[head];
          for (std::size_t y = 0; y < v; ++y) {
            if (adj[x].contains(static_cast<Element>(y))
                && dist[y] == unvisited) {
              dist[y] = dist[x] + 1;
              queue.push_back(y);
            }
          }
        }
        for (std::size_t t = 0; t < v; ++t) {
          if (t == s) {
            continue;
          }
          if (dist[t] == unvisited) {
            return DistanceSummary{false, 0, {s, t}};
          }
          if (dist[t] > out.max_distance) {
            out.max_distance = dist[t];
            out.witness      = {s, t};
          }
        }
      }
      return out;
    }

    GirthResult girth(Adjacency const& adj) {
      std::size_t const v = adj.size();
      GirthResult       out;
      for (std::size_t u = 0; u < v; ++u) {
        for (std::size_t w = u + 1; w < v; ++w) {
          if (!adj[u].contains(static_cast<Element>(w))) {
            continue;
          }
          // BFS from u to w without the edge u-w.
          std::vector<std::size_t> dist(v, unvisited), parent(v, unvisited);
          std::vector<std::size_t> queue{u};
          dist[u] = 0;
          for (std::size_t head = 0; head < queue.size(); ++head) {
            std::size_t x = queue[head];
            for (std::size_t y = 0; y < v; ++y) {
              if (!adj[x].contains(static_cast<Element>(y))
                  || dist[y] != unvisited || (x == u && y == w)) {
                continue;
              }
              dist[y]   = dist[x] + 1;
              parent[y] = x;
              queue.push_back(y);
            }
          }
          if (dist[w] == unvisited) {
            continue;
          }
          std::size_t len = dist[w] + 1;
          if (!out.length || len < *out.length) {
            out.length = len;
            out.cycle.clear();
            for (std::size_t p = w; p != unvisited; p = parent[p]) {
              out.cycle.push_back(p);
            }
            std::reverse(out.cycle.begin(), out.cycle.end());
          }
        }
      }
      return out;
    }

    std::vector<TableCode> associative_tables(std::size_t m) {
      std::size_t const      f = (m - 1) * (m - 1);
      std::vector<TableCode> out;
      TableCode              code(f, 0);
      while (true) {
        auto table = expand_table_code(m, code);
        bool assoc = true;
        for (std::size_t x = 0; x < m; ++x) {
          for (std::size_t y = 0; y < m; ++y) {
            for (std::size_t z = 0; z < m; ++z) {
              if (table[table[x * m + y] * m + z]
                  != table[x * m + table[y * m + z]]) {
                assoc = false;
              }
            }
          }
        }
        if (assoc) {
          out.push_back(code);
        }
        // Odometer increment, last cell fastest.
        std::size_t i = f;
        while (i > 0 && code[i - 1] == m - 1) {
          code[--i] = 0;
        }
        if (i == 0) {
          break;
        }
        ++code[i - 1];
      }
      return out;
    }

  }  // namespace reference

}  // namespace zdg

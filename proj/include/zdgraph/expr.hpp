#ifndef ZDGRAPH_EXPR_HPP_
#define ZDGRAPH_EXPR_HPP_

// Ring expressions:
//
//   expr := term ('x' term)*
//   term := 'Z' UINT | 'M' UINT '(' expr ')' | 'T(' path ')' | '(' expr ')'
//
// Whitespace around tokens is ignored. A chain a x b x c is one product
// node with three factors; a parenthesised product used as a factor stays
// nested.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "zdgraph/ring.hpp"

namespace zdg {

  struct RingExpr {
    enum class Kind { cyclic, product, matrix, table };

    Kind                  kind = Kind::cyclic;
    std::size_t           n    = 0;  // Z_n, or k for M_k
    std::vector<RingExpr> children;
    std::string           path;

    static RingExpr cyclic(std::size_t n);
    static RingExpr product(std::vector<RingExpr> factors);
    static RingExpr matrix(std::size_t k, RingExpr base);
    static RingExpr table(std::string path);

    friend bool operator==(RingExpr const&, RingExpr const&) = default;
  };

  //! Throws ParseError with the byte offset and the expected tokens.
  RingExpr parse_ring_expr(std::string_view text);

  //! Canonical text; parse_ring_expr(unparse(e)) == e.
  std::string unparse(RingExpr const& e);

  //! Tree form, e.g. Matrix(2, Product[Cyclic(2), Cyclic(3)]).
  std::string tree_string(RingExpr const& e);

  //! Builds the ring, applying `cap` to every intermediate ring.
  FiniteRing build_ring(RingExpr const& e, std::size_t cap = default_size_cap);

}  // namespace zdg

#endif  // ZDGRAPH_EXPR_HPP_

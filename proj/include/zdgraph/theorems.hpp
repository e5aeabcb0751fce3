#ifndef ZDGRAPH_THEOREMS_HPP_
#define ZDGRAPH_THEOREMS_HPP_

// Machine checks of the structural results on zero-divisor graphs of
// semigroups and of IPO(R). Every check returns a CheckResult whose witness
// explains the verdict: a counterexample on fail, the unmet hypothesis on
// not-applicable.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "zdgraph/graph.hpp"
#include "zdgraph/ring.hpp"
#include "zdgraph/semigroup.hpp"

namespace zdg {

  using Json = nlohmann::ordered_json;

  //! null for the empty sentinel, "inf", or the number.
  Json distance_json(Distance d);

  enum class CheckStatus { pass, fail, not_applicable };

  //! "pass", "fail", "not-applicable".
  std::string to_string(CheckStatus s);

  struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    Json        witness;

    bool failed() const noexcept {
      return status == CheckStatus::fail;
    }
  };

  ////////////////////////////////////////////////////////////////////////
  // Semigroup-level checks
  ////////////////////////////////////////////////////////////////////////

  CheckResult check_directed_connectivity_iff(FiniteSemigroupWithZero const& s);
  CheckResult check_undirected_connectivity(FiniteSemigroupWithZero const& s);
  CheckResult check_girth_bound(FiniteSemigroupWithZero const& s);

  enum class PathMode { directed, undirected };

  //! Builds a path from a to b following the case analysis of the
  //! connectivity arguments, then drops any detour through a repeated
  //! vertex. Every consecutive pair is verified before returning.
  class PathBuilder {
   public:
    explicit PathBuilder(FiniteSemigroupWithZero const& s);

    //! Vertices a != b of Γ(S) (semigroup indices). Directed mode needs
    //! A^l(S) = A^r(S) and throws HypothesisError otherwise.
    std::vector<Element> path(Element a, Element b, PathMode mode) const;

    AnnSets const& ann() const noexcept {
      return ann_;
    }

   private:
    Element mul(Element a, Element b) const {
      return s_->product(a, b);
    }
    bool linked(Element a, Element b) const {
      return mul(a, b) == 0 || mul(b, a) == 0;
    }
    std::vector<Element> directed(Element a, Element b) const;
    std::vector<Element> undirected(Element a, Element b) const;
    std::vector<Element> finish(std::vector<Element> p, PathMode mode) const;

    FiniteSemigroupWithZero const* s_;
    AnnSets                        ann_;
  };

  std::vector<Element> constructive_path(FiniteSemigroupWithZero const& s,
                                         Element a, Element b, PathMode mode);

  //! Runs the path builder on every ordered pair of distinct vertices and
  //! compares each length with the BFS distance.
  CheckResult check_constructive_paths(FiniteSemigroupWithZero const& s,
                                       PathMode                       mode);

  ////////////////////////////////////////////////////////////////////////
  // Ring-level checks
  ////////////////////////////////////////////////////////////////////////

  //! Tries to build the Cayley table of IPO(R).
  CheckResult check_ipo_closure(FiniteRing const& r);

  CheckResult check_duo_ann_sets(FiniteRing const& r);
  CheckResult check_duo_ann_sets(FiniteRing const&              r,
                                 IpoCollection const&           ipo,
                                 FiniteSemigroupWithZero const& s);

  CheckResult check_not_tournament(FiniteRing const& r);
  CheckResult check_not_tournament(FiniteSemigroupWithZero const& s);

  //! Evaluates the three completeness branches and compares their
  //! disjunction with direct completeness of the undirected graph.
  CheckResult classify_completeness(FiniteRing const& r);
  CheckResult classify_completeness(FiniteRing const&    r,
                                    IpoCollection const& ipo,
                                    ZdGraph const&       g);

  ////////////////////////////////////////////////////////////////////////
  // Matrix rings
  ////////////////////////////////////////////////////////////////////////

  //! Annihilating-ideal graph of a commutative ring built from its ideal
  //! lattice with direct (unoptimised) ideal products. Throws
  //! HypothesisError for a non-commutative ring.
  ZdGraph annihilating_ideal_graph(FiniteRing const& r);

  //! Everything the matrix checks need for M_k(base).
  struct MatrixAnalysis {
    FiniteRing    base;
    std::size_t   k = 0;
    FiniteRing    ring;
    IpoCollection ipo;
    ZdGraph       graph;  // APOG of M_k(base)
  };

  //! Throws HypothesisError for a non-commutative or zero base or k < 2,
  //! CapacityError above `cap`.
  MatrixAnalysis analyze_matrix(FiniteRing const& base, std::size_t k,
                                std::size_t cap = default_size_cap);

  CheckResult check_matrix_diam_lower(MatrixAnalysis const& m);
  CheckResult check_matrix_diam_monotone(MatrixAnalysis const& m);
  CheckResult check_matrix_girth(MatrixAnalysis const& m);

  CheckResult check_matrix_diam_lower(FiniteRing const& base, std::size_t k,
                                      std::size_t cap = default_size_cap);
  CheckResult check_matrix_diam_monotone(FiniteRing const& base, std::size_t k,
                                         std::size_t cap = default_size_cap);
  CheckResult check_matrix_girth(FiniteRing const& base, std::size_t k,
                                 std::size_t cap = default_size_cap);

  ////////////////////////////////////////////////////////////////////////
  // Whole-ring analysis
  ////////////////////////////////////////////////////////////////////////

  struct AnalysisReport {
    std::string        expr;
    std::size_t        ring_order        = 0;
    std::size_t        left_ideal_count  = 0;
    std::size_t        right_ideal_count = 0;
    std::size_t        ipo_size          = 0;
    std::size_t        vertex_count      = 0;
    GraphMetrics       metrics;
    std::vector<CheckResult> checks;
    //! APOG(R); not serialised.
    ZdGraph graph;

    bool any_failed() const;
  };

  //! Ideals, IPO(R), its graphs, their metrics and every check, in a fixed
  //! order. `expr` defaults to the ring's name.
  AnalysisReport run_all(FiniteRing const& r, std::string expr = {});

  //! The semigroup-level checks only (for semigroups not coming from a
  //! ring).
  std::vector<CheckResult> run_semigroup_checks(
      FiniteSemigroupWithZero const& s);

}  // namespace zdg

#endif  // ZDGRAPH_THEOREMS_HPP_

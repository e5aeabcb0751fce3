#ifndef ZDGRAPH_RING_HPP_
#define ZDGRAPH_RING_HPP_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zdgraph/element_set.hpp"

namespace zdg {

  //! Default bound on the order of rings built by the product and matrix
  //! constructors. M_2(Z_12) has 20 736 elements.
  inline constexpr std::size_t default_size_cap = 25000;

  //! Rings up to this order keep dense addition and multiplication tables;
  //! larger ones compute through their arithmetic backend.
  inline constexpr std::size_t dense_table_limit = 2048;

  enum class Side { left, right };

  class FiniteRing;

  //! Describes M_k(base) when a ring was produced by make_matrix_ring.
  struct MatrixShape {
    std::shared_ptr<FiniteRing const> base;
    std::size_t                       k;
  };

  //! Finite unital ring on the indices 0..n-1 with 0 the additive identity.
  //!
  //! A FiniteRing is a cheap, immutable handle; copies share the tables.
  class FiniteRing {
   public:
    //! Arithmetic backend for rings too large for dense tables.
    class Arithmetic {
     public:
      virtual ~Arithmetic()                            = default;
      virtual Element add(Element x, Element y) const = 0;
      virtual Element mul(Element x, Element y) const = 0;
      virtual Element neg(Element x) const            = 0;
    };

    //! Wraps raw n x n tables (row-major). No axioms are checked here; use
    //! validate_ring. `one` may be any index (the zero ring has one = 0).
    FiniteRing(std::string name, std::size_t order, std::vector<Element> add,
               std::vector<Element> mul, Element one);

    //! Wraps a backend, materialising tables when order <= dense_table_limit.
    FiniteRing(std::string name, std::size_t order,
               std::shared_ptr<Arithmetic const> arithmetic, Element one,
               std::optional<MatrixShape> shape = std::nullopt);

    std::size_t order() const noexcept {
      return n_;
    }
    static constexpr Element zero() noexcept {
      return 0;
    }
    Element one() const noexcept {
      return one_;
    }
    std::string const& name() const noexcept;
    bool               is_zero_ring() const noexcept {
      return n_ == 1;
    }

    Element add(Element x, Element y) const {
      return add_ != nullptr ? add_[x * n_ + y] : arithmetic_->add(x, y);
    }
    Element mul(Element x, Element y) const {
      return mul_ != nullptr ? mul_[x * n_ + y] : arithmetic_->mul(x, y);
    }
    //! Additive inverse; order() if the tables have none (unvalidated input).
    Element neg(Element x) const {
      return neg_[x];
    }
    Element sub(Element x, Element y) const {
      return add(x, neg(y));
    }

    bool has_dense_tables() const noexcept {
      return add_ != nullptr;
    }

    //! A small additive generating set of (R, +), computed once.
    std::span<Element const> additive_generators() const;

    //! Non-null when built by make_matrix_ring.
    MatrixShape const* matrix_shape() const noexcept;

    bool is_commutative() const;

    ElementSet all() const {
      return ElementSet::full(n_);
    }
    ElementSet zero_set() const {
      return ElementSet::singleton(n_, 0);
    }

   private:
    struct Impl;
    void bind();

    std::shared_ptr<Impl const>       impl_;
    std::shared_ptr<Arithmetic const> arithmetic_;
    std::size_t                       n_   = 0;
    Element                           one_ = 0;
    Element const*                    add_ = nullptr;
    Element const*                    mul_ = nullptr;
    Element const*                    neg_ = nullptr;
  };

  ////////////////////////////////////////////////////////////////////////
  // Constructors
  ////////////////////////////////////////////////////////////////////////

  //! Z_n. n = 1 gives the zero ring.
  FiniteRing make_cyclic_ring(std::size_t n);

  //! a x b with (i, j) at index i * |b| + j.
  FiniteRing make_product_ring(FiniteRing const& a, FiniteRing const& b,
                               std::size_t cap = default_size_cap);

  //! M_k(base); entry (0,0) is the most significant base-|base| digit of the
  //! index, then row-major.
  FiniteRing make_matrix_ring(FiniteRing const& base, std::size_t k,
                              std::size_t cap = default_size_cap);

  //! Reads the plain-text table format: n, then n rows of the addition
  //! table, then n rows of the multiplication table. The additive identity
  //! is moved to index 0 if needed and unity is detected. Throws FormatError
  //! or AxiomError.
  FiniteRing load_table_ring(std::istream& in, std::string name = "T");
  FiniteRing load_table_ring(std::filesystem::path const& path);

  //! Inverse of load_table_ring.
  std::string format_table_ring(FiniteRing const& r);

  //! Exhaustive O(n^3) check of the unital ring axioms. Throws AxiomError
  //! naming the first failing tuple.
  void validate_ring(FiniteRing const& r);

  ////////////////////////////////////////////////////////////////////////
  // Matrix helpers (rings with a MatrixShape)
  ////////////////////////////////////////////////////////////////////////

  std::vector<Element> matrix_entries(FiniteRing const& m, Element x);
  Element matrix_from_entries(FiniteRing const&        m,
                              std::span<Element const> entries);
  //! E_ij: base unity at (i, j), zero elsewhere.
  Element matrix_unit(FiniteRing const& m, std::size_t i, std::size_t j);

  ////////////////////////////////////////////////////////////////////////
  // Element-level predicates
  ////////////////////////////////////////////////////////////////////////

  //! D(R): a with ab = 0 or ba = 0 for some nonzero b. Contains 0 whenever
  //! the ring has a nonzero element.
  ElementSet element_zero_divisors(FiniteRing const& r);

  //! Two-sided units.
  ElementSet units(FiniteRing const& r);

  //! Throws InvalidArgument on the zero ring.
  bool is_division_ring(FiniteRing const& r);

  //! e with e^2 = e central, ascending.
  std::vector<Element> central_idempotents(FiniteRing const& r);

  struct LocalRingInfo {
    bool                      local = false;
    std::optional<ElementSet> maximal_ideal;
  };

  //! Local iff the non-units form a two-sided ideal, which is then 𝔪.
  //! Throws InvalidArgument on the zero ring.
  LocalRingInfo is_local_ring(FiniteRing const& r);

  //! Intersection of the maximal right (or left) ideals among the enumerated
  //! one-sided ideals. Throws InvalidArgument on the zero ring.
  ElementSet jacobson_radical(FiniteRing const& r, Side side = Side::right);

}  // namespace zdg

#endif  // ZDGRAPH_RING_HPP_

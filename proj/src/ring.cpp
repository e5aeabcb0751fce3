#include "zdgraph/ring.hpp"

#include <array>
#include <istream>
#include <fstream>
#include <mutex>
#include <sstream>
#include <utility>

#include "zdgraph/additive_span.hpp"
#include "zdgraph/error.hpp"

namespace zdg {

  struct FiniteRing::Impl {
    std::string                name;
    std::vector<Element>       add;
    std::vector<Element>       mul;
    std::vector<Element>       neg;
    std::optional<MatrixShape> shape;

    mutable std::once_flag       generators_once;
    mutable std::vector<Element> generators;
  };

  namespace {

    class CyclicArithmetic final : public FiniteRing::Arithmetic {
     public:
      explicit CyclicArithmetic(std::uint64_t n) : n_(n) {}
      Element add(Element x, Element y) const override {
        return static_cast<Element>((std::uint64_t{x} + y) % n_);
      }
      Element mul(Element x, Element y) const override {
        return static_cast<Element>((std::uint64_t{x} * y) % n_);
      }
      Element neg(Element x) const override {
        return x == 0 ? 0 : static_cast<Element>(n_ - x);
      }

     private:
      std::uint64_t n_;
    };

    class ProductArithmetic final : public FiniteRing::Arithmetic {
     public:
      ProductArithmetic(FiniteRing a, FiniteRing b)
          : a_(std::move(a)), b_(std::move(b)), nb_(b_.order()) {}
      Element add(Element x, Element y) const override {
        return a_.add(x / nb_, y / nb_) * nb_ + b_.add(x % nb_, y % nb_);
      }
      Element mul(Element x, Element y) const override {
        return a_.mul(x / nb_, y / nb_) * nb_ + b_.mul(x % nb_, y % nb_);
      }
      Element neg(Element x) const override {
        return a_.neg(x / nb_) * nb_ + b_.neg(x % nb_);
      }

     private:
      FiniteRing a_;
      FiniteRing b_;
      Element    nb_;
    };

    constexpr std::size_t max_matrix_entries = 64;
    using Entries = std::array<Element, max_matrix_entries>;

    class MatrixArithmetic final : public FiniteRing::Arithmetic {
     public:
      MatrixArithmetic(FiniteRing base, std::size_t k)
          : base_(std::move(base)), k_(k), q_(base_.order()) {}

      void decode(Element x, Entries& e) const {
        for (std::size_t i = k_ * k_; i-- > 0;) {
          e[i] = x % q_;
          x /= q_;
        }
      }
      Element encode(Entries const& e) const {
        Element x = 0;
        for (std::size_t i = 0; i < k_ * k_; ++i) {
          x = x * q_ + e[i];
        }
        return x;
      }

      Element add(Element x, Element y) const override {
        Entries a, b;
        decode(x, a);
        decode(y, b);
        for (std::size_t i = 0; i < k_ * k_; ++i) {
          a[i] = base_.add(a[i], b[i]);
        }
        return encode(a);
      }
      Element mul(Element x, Element y) const override {
        Entries a, b, c;
        decode(x, a);
        decode(y, b);
        for (std::size_t i = 0; i < k_; ++i) {
          for (std::size_t j = 0; j < k_; ++j) {
            Element acc = 0;
            for (std::size_t l = 0; l < k_; ++l) {
              acc = base_.add(acc, base_.mul(a[i * k_ + l], b[l * k_ + j]));
            }
            c[i * k_ + j] = acc;
          }
        }
        return encode(c);
      }
      Element neg(Element x) const override {
        Entries a;
        decode(x, a);
        for (std::size_t i = 0; i < k_ * k_; ++i) {
          a[i] = base_.neg(a[i]);
        }
        return encode(a);
      }

     private:
      FiniteRing  base_;
      std::size_t k_;
      Element     q_;
    };

    // Returns base^exp, or nullopt once the value exceeds cap.
    std::optional<std::size_t> bounded_power(std::size_t base, std::size_t exp,
                                             std::size_t cap) {
      std::size_t v = 1;
      for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && v > cap / base) {
          return std::nullopt;
        }
        v *= base;
      }
      if (v > cap) {
        return std::nullopt;
      }
      return v;
    }

    void materialise(std::size_t n, FiniteRing::Arithmetic const& a,
                     std::vector<Element>& add, std::vector<Element>& mul) {
      add.resize(n * n);
      mul.resize(n * n);
#pragma omp parallel for schedule(static)
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          add[x * n + y] = a.add(static_cast<Element>(x), static_cast<Element>(y));
          mul[x * n + y] = a.mul(static_cast<Element>(x), static_cast<Element>(y));
        }
      }
    }

  }  // namespace

  FiniteRing::FiniteRing(std::string name, std::size_t order,
                         std::vector<Element> add, std::vector<Element> mul,
                         Element one) {
    if (order == 0) {
      throw InvalidArgument("a ring needs at least one element");
    }
    if (add.size() != order * order || mul.size() != order * order) {
      throw InvalidArgument("table size does not match the ring order");
    }
    auto impl  = std::make_shared<Impl>();
    impl->name = std::move(name);
    impl->add  = std::move(add);
    impl->mul  = std::move(mul);
    impl->neg.assign(order, static_cast<Element>(order));
    for (std::size_t x = 0; x < order; ++x) {
      for (std::size_t y = 0; y < order; ++y) {
        if (impl->add[x * order + y] == 0) {
          impl->neg[x] = static_cast<Element>(y);
          break;
        }
      }
    }
    impl_ = std::move(impl);
    n_    = order;
    one_  = one;
    bind();
  }

  FiniteRing::FiniteRing(std::string name, std::size_t order,
                         std::shared_ptr<Arithmetic const> arithmetic,
                         Element one, std::optional<MatrixShape> shape) {
    if (order == 0) {
      throw InvalidArgument("a ring needs at least one element");
    }
    auto impl   = std::make_shared<Impl>();
    impl->name  = std::move(name);
    impl->shape = std::move(shape);
    impl->neg.resize(order);
    for (std::size_t x = 0; x < order; ++x) {
      impl->neg[x] = arithmetic->neg(static_cast<Element>(x));
    }
    if (order <= dense_table_limit) {
      materialise(order, *arithmetic, impl->add, impl->mul);
    } else {
      arithmetic_ = std::move(arithmetic);
    }
    impl_ = std::move(impl);
    n_    = order;
    one_  = one;
    bind();
  }

  void FiniteRing::bind() {
    add_ = impl_->add.empty() ? nullptr : impl_->add.data();
    mul_ = impl_->mul.empty() ? nullptr : impl_->mul.data();
    neg_ = impl_->neg.data();
  }

  std::string const& FiniteRing::name() const noexcept {
    return impl_->name;
  }

  MatrixShape const* FiniteRing::matrix_shape() const noexcept {
    return impl_->shape ? &*impl_->shape : nullptr;
  }

  std::span<Element const> FiniteRing::additive_generators() const {
    std::call_once(impl_->generators_once, [this] {
      AdditiveSpan span(*this);
      for (std::size_t x = 0; x < n_ && span.size() < n_; ++x) {
        span.extend(static_cast<Element>(x));
      }
      impl_->generators = span.generators();
    });
    return impl_->generators;
  }

  bool FiniteRing::is_commutative() const {
    for (Element x = 0; x < n_; ++x) {
      for (Element y = x + 1; y < n_; ++y) {
        if (mul(x, y) != mul(y, x)) {
          return false;
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Constructors
  ////////////////////////////////////////////////////////////////////////

  FiniteRing make_cyclic_ring(std::size_t n) {
    if (n == 0) {
      throw InvalidArgument("Z_n needs n >= 1");
    }
    return FiniteRing("Z" + std::to_string(n), n,
                      std::make_shared<CyclicArithmetic>(n),
                      static_cast<Element>(1 % n));
  }

  FiniteRing make_product_ring(FiniteRing const& a, FiniteRing const& b,
                               std::size_t cap) {
    std::size_t const na = a.order(), nb = b.order();
    if (na > cap / nb || na * nb > cap) {
      throw CapacityError("product " + a.name() + " x " + b.name()
                          + " exceeds the size cap of " + std::to_string(cap));
    }
    auto wrap = [](FiniteRing const& r) {
      return r.name().find(" x ") != std::string::npos ? "(" + r.name() + ")"
                                                        : r.name();
    };
    Element one = static_cast<Element>(a.one() * nb + b.one());
    return FiniteRing(wrap(a) + " x " + wrap(b), na * nb,
                      std::make_shared<ProductArithmetic>(a, b), one);
  }

  FiniteRing make_matrix_ring(FiniteRing const& base, std::size_t k,
                              std::size_t cap) {
    if (k == 0) {
      throw InvalidArgument("M_k needs k >= 1");
    }
    std::string name = "M" + std::to_string(k) + "(" + base.name() + ")";
    if (base.order() == 1) {
      // Every matrix over the zero ring is zero.
      return FiniteRing(name, 1, std::vector<Element>{0},
                        std::vector<Element>{0}, 0);
    }
    auto order = bounded_power(base.order(), k * k, cap);
    if (!order || k * k > max_matrix_entries) {
      throw CapacityError(name + " exceeds the size cap of "
                          + std::to_string(cap));
    }
    auto arithmetic = std::make_shared<MatrixArithmetic>(base, k);
    Entries e{};
    for (std::size_t i = 0; i < k; ++i) {
      e[i * k + i] = base.one();
    }
    Element one = arithmetic->encode(e);
    return FiniteRing(std::move(name), *order, std::move(arithmetic), one,
                      MatrixShape{std::make_shared<FiniteRing const>(base), k});
  }

  ////////////////////////////////////////////////////////////////////////
  // Matrix helpers
  ////////////////////////////////////////////////////////////////////////

  namespace {
    MatrixShape const& require_shape(FiniteRing const& m) {
      auto const* shape = m.matrix_shape();
      if (shape == nullptr) {
        throw InvalidArgument(m.name() + " is not a matrix ring");
      }
      return *shape;
    }
  }  // namespace

  std::vector<Element> matrix_entries(FiniteRing const& m, Element x) {
    auto const& shape = require_shape(m);
    Element     q     = static_cast<Element>(shape.base->order());
    std::vector<Element> e(shape.k * shape.k);
    for (std::size_t i = e.size(); i-- > 0;) {
      e[i] = x % q;
      x /= q;
    }
    return e;
  }

  Element matrix_from_entries(FiniteRing const&        m,
                              std::span<Element const> entries) {
    auto const& shape = require_shape(m);
    if (entries.size() != shape.k * shape.k) {
      throw InvalidArgument("wrong number of matrix entries");
    }
    Element q = static_cast<Element>(shape.base->order());
    Element x = 0;
    for (Element v : entries) {
      x = x * q + v;
    }
    return x;
  }

  Element matrix_unit(FiniteRing const& m, std::size_t i, std::size_t j) {
    auto const& shape = require_shape(m);
    if (i >= shape.k || j >= shape.k) {
      throw InvalidArgument("matrix unit index out of range");
    }
    std::vector<Element> e(shape.k * shape.k, 0);
    e[i * shape.k + j] = shape.base->one();
    return matrix_from_entries(m, e);
  }

  ////////////////////////////////////////////////////////////////////////
  // Validation
  ////////////////////////////////////////////////////////////////////////

  void validate_ring(FiniteRing const& r) {
    std::size_t const n = r.order();
    using W             = std::vector<std::size_t>;
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (r.add(x, y) >= n) {
          throw AxiomError("addition table entry out of range", W{x, y});
        }
        if (r.mul(x, y) >= n) {
          throw AxiomError("multiplication table entry out of range", W{x, y});
        }
      }
    }
    for (Element x = 0; x < n; ++x) {
      if (r.add(0, x) != x || r.add(x, 0) != x) {
        throw AxiomError("0 is not the additive identity", W{x});
      }
    }
    for (Element x = 0; x < n; ++x) {
      for (Element y = x + 1; y < n; ++y) {
        if (r.add(x, y) != r.add(y, x)) {
          throw AxiomError("addition is not commutative", W{x, y});
        }
      }
    }
    for (Element x = 0; x < n; ++x) {
      if (r.neg(x) >= n) {
        throw AxiomError("no additive inverse", W{x});
      }
    }
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        Element xy = r.add(x, y), pxy = r.mul(x, y);
        for (Element z = 0; z < n; ++z) {
          if (r.add(xy, z) != r.add(x, r.add(y, z))) {
            throw AxiomError("addition is not associative", W{x, y, z});
          }
          if (r.mul(pxy, z) != r.mul(x, r.mul(y, z))) {
            throw AxiomError("multiplication is not associative", W{x, y, z});
          }
          if (r.mul(x, r.add(y, z)) != r.add(pxy, r.mul(x, z))) {
            throw AxiomError("left distributivity fails", W{x, y, z});
          }
          if (r.mul(xy, z) != r.add(r.mul(x, z), r.mul(y, z))) {
            throw AxiomError("right distributivity fails", W{x, y, z});
          }
        }
      }
    }
    for (Element x = 0; x < n; ++x) {
      if (r.mul(r.one(), x) != x || r.mul(x, r.one()) != x) {
        throw AxiomError("claimed unity is not a two-sided identity",
                         W{r.one(), x});
      }
      if (r.mul(0, x) != 0 || r.mul(x, 0) != 0) {
        throw AxiomError("0 does not annihilate", W{x});
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Table files
  ////////////////////////////////////////////////////////////////////////

  namespace {

    std::size_t read_index(std::istream& in, std::size_t bound,
                           char const* what) {
      long long v;
      if (!(in >> v)) {
        throw FormatError(std::string("unexpected end of input in ") + what);
      }
      if (v < 0 || static_cast<unsigned long long>(v) >= bound) {
        throw FormatError(std::string("index ") + std::to_string(v) + " in "
                          + what + " is out of range");
      }
      return static_cast<std::size_t>(v);
    }

  }  // namespace

  FiniteRing load_table_ring(std::istream& in, std::string name) {
    long long order;
    if (!(in >> order)) {
      throw FormatError("expected the ring order on the first line");
    }
    if (order <= 0 || order > 65536) {
      throw FormatError("ring order must be in 1..65536");
    }
    std::size_t const    n = static_cast<std::size_t>(order);
    std::vector<Element> add(n * n), mul(n * n);
    for (auto& v : add) {
      v = static_cast<Element>(read_index(in, n, "the addition table"));
    }
    for (auto& v : mul) {
      v = static_cast<Element>(read_index(in, n, "the multiplication table"));
    }
    std::string trailing;
    if (in >> trailing) {
      throw FormatError("unexpected trailing content '" + trailing + "'");
    }

    // Locate the additive identity and move it to index 0.
    std::optional<Element> zero;
    for (Element z = 0; z < n && !zero; ++z) {
      bool ok = true;
      for (Element x = 0; x < n && ok; ++x) {
        ok = add[z * n + x] == x && add[x * n + z] == x;
      }
      if (ok) {
        zero = z;
      }
    }
    if (!zero) {
      throw AxiomError("no additive identity", {});
    }
    if (*zero != 0) {
      auto relabel = [z = *zero](Element x) -> Element {
        return x == z ? 0 : (x == 0 ? z : x);
      };
      std::vector<Element> a2(n * n), m2(n * n);
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          a2[relabel(x) * n + relabel(y)] = relabel(add[x * n + y]);
          m2[relabel(x) * n + relabel(y)] = relabel(mul[x * n + y]);
        }
      }
      add = std::move(a2);
      mul = std::move(m2);
    }

    std::optional<Element> one;
    for (Element e = 0; e < n && !one; ++e) {
      bool ok = true;
      for (Element x = 0; x < n && ok; ++x) {
        ok = mul[e * n + x] == x && mul[x * n + e] == x;
      }
      if (ok) {
        one = e;
      }
    }

    FiniteRing r(std::move(name), n, std::move(add), std::move(mul),
                 one.value_or(0));
    if (!one) {
      // Report table-level violations first; they are the likelier cause.
      FiniteRing probe = r;
      try {
        validate_ring(probe);
      } catch (AxiomError const& e) {
        if (std::string(e.axiom()).find("unity") == std::string::npos) {
          throw;
        }
      }
      throw AxiomError("no multiplicative unity", {});
    }
    validate_ring(r);
    return r;
  }

  FiniteRing load_table_ring(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) {
      throw FormatError("cannot open table file " + path.string());
    }
    return load_table_ring(in, "T(" + path.string() + ")");
  }

  std::string format_table_ring(FiniteRing const& r) {
    std::ostringstream out;
    std::size_t const  n = r.order();
    out << n << '\n';
    for (int table = 0; table < 2; ++table) {
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          out << (y == 0 ? "" : " ") << (table == 0 ? r.add(x, y) : r.mul(x, y));
        }
        out << '\n';
      }
    }
    return out.str();
  }

}  // namespace zdg

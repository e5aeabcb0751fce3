#ifndef ZDGRAPH_DISTANCE_HPP_
#define ZDGRAPH_DISTANCE_HPP_

#include <cstddef>
#include <string>

namespace zdg {

  //! A diameter or girth value: a natural number, infinity (disconnected /
  //! acyclic), or the empty sentinel used for graphs with fewer than two
  //! vertices.
  class Distance {
   public:
    enum class Kind { empty, finite, infinite };

    static constexpr Distance empty() noexcept {
      return Distance(Kind::empty, 0);
    }
    static constexpr Distance infinite() noexcept {
      return Distance(Kind::infinite, 0);
    }
    static constexpr Distance finite(std::size_t v) noexcept {
      return Distance(Kind::finite, v);
    }

    constexpr Kind kind() const noexcept {
      return kind_;
    }
    constexpr bool is_finite() const noexcept {
      return kind_ == Kind::finite;
    }
    constexpr bool is_infinite() const noexcept {
      return kind_ == Kind::infinite;
    }
    constexpr bool is_empty() const noexcept {
      return kind_ == Kind::empty;
    }
    //! Only meaningful when is_finite().
    constexpr std::size_t value() const noexcept {
      return value_;
    }

    //! Total order with empty < every finite value < infinite.
    constexpr int rank_compare(Distance const& o) const noexcept {
      auto rank = [](Kind k) {
        return k == Kind::empty ? 0 : (k == Kind::finite ? 1 : 2);
      };
      if (rank(kind_) != rank(o.kind_)) {
        return rank(kind_) < rank(o.kind_) ? -1 : 1;
      }
      if (kind_ != Kind::finite || value_ == o.value_) {
        return 0;
      }
      return value_ < o.value_ ? -1 : 1;
    }

    //! "null", "inf" or the decimal value.
    std::string to_string() const {
      switch (kind_) {
        case Kind::empty:
          return "null";
        case Kind::infinite:
          return "inf";
        default:
          return std::to_string(value_);
      }
    }

    friend constexpr bool operator==(Distance const&,
                                     Distance const&) noexcept = default;

   private:
    constexpr Distance(Kind k, std::size_t v) noexcept : kind_(k), value_(v) {}

    Kind        kind_;
    std::size_t value_;
  };

}  // namespace zdg

#endif  // ZDGRAPH_DISTANCE_HPP_

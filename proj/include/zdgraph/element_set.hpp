#ifndef ZDGRAPH_ELEMENT_SET_HPP_
#define ZDGRAPH_ELEMENT_SET_HPP_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace zdg {

  //! Index of an element of a finite structure (ring or semigroup).
  using Element = std::uint32_t;

  //! Fixed-universe bit-vector over {0, ..., n-1}.
  //!
  //! Used for subsets of ring elements (ideals, annihilators, D(R)) and for
  //! adjacency rows of graphs. Ordering is lexicographic over the bit
  //! sequence b_0 b_1 ... b_{n-1}, with a clear bit sorting before a set bit.
  class ElementSet {
   public:
    ElementSet() = default;
    explicit ElementSet(std::size_t universe)
        : n_(universe), words_((universe + 63) / 64, 0) {}

    static ElementSet full(std::size_t universe);
    static ElementSet singleton(std::size_t universe, Element x) {
      ElementSet s(universe);
      s.insert(x);
      return s;
    }
    template <typename Range>
    static ElementSet from(std::size_t universe, Range const& xs) {
      ElementSet s(universe);
      for (auto x : xs) {
        s.insert(static_cast<Element>(x));
      }
      return s;
    }

    std::size_t universe() const noexcept {
      return n_;
    }

    bool contains(Element x) const noexcept {
      return (words_[x >> 6] >> (x & 63)) & 1U;
    }
    void insert(Element x) noexcept {
      words_[x >> 6] |= std::uint64_t{1} << (x & 63);
    }
    void erase(Element x) noexcept {
      words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63));
    }
    //! Inserts x and reports whether it was absent.
    bool insert_new(Element x) noexcept {
      std::uint64_t& w    = words_[x >> 6];
      std::uint64_t  mask = std::uint64_t{1} << (x & 63);
      bool           was  = w & mask;
      w |= mask;
      return !was;
    }

    std::size_t count() const noexcept;
    bool        none() const noexcept;
    bool        any() const noexcept {
      return !none();
    }
    bool subset_of(ElementSet const& other) const noexcept;
    bool intersects(ElementSet const& other) const noexcept;
    //! Smallest member, or universe() when empty.
    std::size_t first() const noexcept;
    //! Smallest member strictly greater than x, or universe().
    std::size_t next(std::size_t x) const noexcept;

    ElementSet& operator&=(ElementSet const& other) noexcept;
    ElementSet& operator|=(ElementSet const& other) noexcept;
    //! this <- this \ other
    ElementSet& subtract(ElementSet const& other) noexcept;
    //! |this & other| capped at `limit`.
    std::size_t intersection_count(ElementSet const& other,
                                   std::size_t       limit) const noexcept;

    std::vector<Element> elements() const;
    //! "{0,2,4}"
    std::string to_string() const;
    std::size_t hash() const noexcept;

    template <typename F>
    void for_each(F&& f) const {
      for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t bits = words_[w];
        while (bits != 0) {
          int tz = std::countr_zero(bits);
          f(static_cast<Element>(w * 64 + tz));
          bits &= bits - 1;
        }
      }
    }

    std::vector<std::uint64_t> const& words() const noexcept {
      return words_;
    }

    friend bool operator==(ElementSet const&, ElementSet const&) = default;
    friend std::strong_ordering operator<=>(ElementSet const& a,
                                            ElementSet const& b) noexcept;

   private:
    std::size_t                n_ = 0;
    std::vector<std::uint64_t> words_;
  };

  struct ElementSetHash {
    std::size_t operator()(ElementSet const& s) const noexcept {
      return s.hash();
    }
  };

}  // namespace zdg

#endif  // ZDGRAPH_ELEMENT_SET_HPP_

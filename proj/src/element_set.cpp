#include "zdgraph/element_set.hpp"

#include <algorithm>

namespace zdg {

  ElementSet ElementSet::full(std::size_t universe) {
    ElementSet s(universe);
    std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
    if (universe % 64 != 0) {
      s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
    }
    return s;
  }

  std::size_t ElementSet::count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) {
      c += std::popcount(w);
    }
    return c;
  }

  bool ElementSet::none() const noexcept {
    return std::all_of(
        words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }

  bool ElementSet::subset_of(ElementSet const& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((words_[i] & ~other.words_[i]) != 0) {
        return false;
      }
    }
    return true;
  }

  bool ElementSet::intersects(ElementSet const& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((words_[i] & other.words_[i]) != 0) {
        return true;
      }
    }
    return false;
  }

  std::size_t ElementSet::first() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] != 0) {
        return w * 64 + std::countr_zero(words_[w]);
      }
    }
    return n_;
  }

  std::size_t ElementSet::next(std::size_t x) const noexcept {
    ++x;
    if (x >= n_) {
      return n_;
    }
    std::size_t   w    = x >> 6;
    std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (x & 63));
    while (true) {
      if (bits != 0) {
        return w * 64 + std::countr_zero(bits);
      }
      if (++w == words_.size()) {
        return n_;
      }
      bits = words_[w];
    }
  }

  ElementSet& ElementSet::operator&=(ElementSet const& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      words_[i] &= other.words_[i];
    }
    return *this;
  }

  ElementSet& ElementSet::operator|=(ElementSet const& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      words_[i] |= other.words_[i];
    }
    return *this;
  }

  ElementSet& ElementSet::subtract(ElementSet const& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      words_[i] &= ~other.words_[i];
    }
    return *this;
  }

  std::size_t ElementSet::intersection_count(ElementSet const& other,
                                             std::size_t limit) const noexcept {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size() && c < limit; ++i) {
      c += std::popcount(words_[i] & other.words_[i]);
    }
    return std::min(c, limit);
  }

  std::vector<Element> ElementSet::elements() const {
    std::vector<Element> out;
    out.reserve(count());
    for_each([&out](Element x) { out.push_back(x); });
    return out;
  }

  std::string ElementSet::to_string() const {
    std::string out = "{";
    bool        sep = false;
    for_each([&](Element x) {
      if (sep) {
        out += ',';
      }
      out += std::to_string(x);
      sep = true;
    });
    out += '}';
    return out;
  }

  std::size_t ElementSet::hash() const noexcept {
    // FNV-1a over the words, seeded with the universe size.
    std::uint64_t h = 1469598103934665603ULL ^ n_;
    for (auto w : words_) {
      h ^= w;
      h *= 1099511628211ULL;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }

  std::strong_ordering operator<=>(ElementSet const& a,
                                   ElementSet const& b) noexcept {
    std::size_t words = std::min(a.words_.size(), b.words_.size());
    for (std::size_t i = 0; i < words; ++i) {
      std::uint64_t diff = a.words_[i] ^ b.words_[i];
      if (diff != 0) {
        std::uint64_t low = diff & (~diff + 1);
        return (a.words_[i] & low) != 0 ? std::strong_ordering::greater
                                        : std::strong_ordering::less;
      }
    }
    return a.n_ <=> b.n_;
  }

}  // namespace zdg

#ifndef EDENSE_ELEMENT_SET_HPP_
#define EDENSE_ELEMENT_SET_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "error.hpp"

namespace edense {

  using ElementId = std::size_t;

  // A subset of {0, ..., universe - 1}, stored as a bitset.  Iteration visits
  // members in increasing order.
  class ElementSet {
    using word_type                        = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

   public:
    class const_iterator {
     public:
      using iterator_category = std::forward_iterator_tag;
      using value_type        = ElementId;
      using difference_type   = std::ptrdiff_t;
      using pointer           = ElementId const*;
      using reference         = ElementId;

      const_iterator() = default;
      const_iterator(ElementSet const* set, std::size_t pos)
          : _set(set), _pos(pos) {
        skip();
      }

      ElementId operator*() const {
        return _pos;
      }

      const_iterator& operator++() {
        ++_pos;
        skip();
        return *this;
      }

      const_iterator operator++(int) {
        auto copy = *this;
        ++*this;
        return copy;
      }

      bool operator==(const_iterator const& that) const {
        return _pos == that._pos;
      }

     private:
      void skip() {
        auto const n = _set->_universe;
        while (_pos < n) {
          auto word = _set->_words[_pos / word_bits] >> (_pos % word_bits);
          if (word != 0) {
            _pos += std::countr_zero(word);
            return;
          }
          _pos = (_pos / word_bits + 1) * word_bits;
        }
        _pos = n;
      }

      ElementSet const* _set = nullptr;
      std::size_t       _pos = 0;
    };

    ElementSet() = default;

    explicit ElementSet(std::size_t universe)
        : _universe(universe), _words((universe + word_bits - 1) / word_bits) {}

    ElementSet(std::size_t universe, std::initializer_list<ElementId> members)
        : ElementSet(universe) {
      for (auto x : members) {
        insert(x);
      }
    }

    template <typename Range>
    static ElementSet from_range(std::size_t universe, Range const& members) {
      ElementSet result(universe);
      for (auto x : members) {
        result.insert(static_cast<ElementId>(x));
      }
      return result;
    }

    static ElementSet full(std::size_t universe) {
      ElementSet result(universe);
      for (ElementId x = 0; x < universe; ++x) {
        result.insert(x);
      }
      return result;
    }

    // Members are the set bits of mask; only valid for universe <= 64.
    static ElementSet from_mask(std::size_t universe, std::uint64_t mask) {
      ElementSet result(universe);
      if (universe > 0) {
        auto const keep = universe >= 64 ? ~std::uint64_t{0}
                                         : (std::uint64_t{1} << universe) - 1;
        result._words[0] = mask & keep;
      }
      return result;
    }

    std::size_t universe() const noexcept {
      return _universe;
    }

    bool contains(ElementId x) const noexcept {
      return x < _universe && ((_words[x / word_bits] >> (x % word_bits)) & 1U);
    }

    void insert(ElementId x) {
      if (x >= _universe) {
        throw Error(ErrorCode::OutOfRangeEntry,
                    "element " + std::to_string(x) + " outside universe of size "
                        + std::to_string(_universe),
                    {x});
      }
      _words[x / word_bits] |= word_type{1} << (x % word_bits);
    }

    void erase(ElementId x) noexcept {
      if (x < _universe) {
        _words[x / word_bits] &= ~(word_type{1} << (x % word_bits));
      }
    }

    std::size_t size() const noexcept {
      std::size_t count = 0;
      for (auto w : _words) {
        count += std::popcount(w);
      }
      return count;
    }

    bool empty() const noexcept {
      for (auto w : _words) {
        if (w != 0) {
          return false;
        }
      }
      return true;
    }

    const_iterator begin() const {
      return const_iterator(this, 0);
    }

    const_iterator end() const {
      return const_iterator(this, _universe);
    }

    std::vector<ElementId> members() const {
      return std::vector<ElementId>(begin(), end());
    }

    // Least member; undefined on the empty set.
    ElementId front() const {
      return *begin();
    }

    bool is_subset_of(ElementSet const& that) const noexcept {
      for (auto x : *this) {
        if (!that.contains(x)) {
          return false;
        }
      }
      return true;
    }

    bool intersects(ElementSet const& that) const noexcept {
      for (auto x : *this) {
        if (that.contains(x)) {
          return true;
        }
      }
      return false;
    }

    ElementSet& operator|=(ElementSet const& that) {
      for (auto x : that) {
        insert(x);
      }
      return *this;
    }

    ElementSet& operator&=(ElementSet const& that) {
      for (std::size_t i = 0; i < _words.size(); ++i) {
        _words[i] &= i < that._words.size() ? that._words[i] : 0;
      }
      return *this;
    }

    friend ElementSet operator|(ElementSet lhs, ElementSet const& rhs) {
      return lhs |= rhs;
    }

    friend ElementSet operator&(ElementSet lhs, ElementSet const& rhs) {
      return lhs &= rhs;
    }

    friend bool operator==(ElementSet const& lhs, ElementSet const& rhs) {
      return lhs._universe == rhs._universe && lhs._words == rhs._words;
    }

    // Lexicographic on sorted member lists, so sets sort by least member.
    friend bool operator<(ElementSet const& lhs, ElementSet const& rhs) {
      auto l = lhs.members();
      auto r = rhs.members();
      return l < r;
    }

    // "{0, 3}"
    std::string to_string() const {
      std::ostringstream os;
      os << '{';
      bool first = true;
      for (auto x : *this) {
        os << (first ? "" : ", ") << x;
        first = false;
      }
      os << '}';
      return os.str();
    }

    // "0 3", the subset text format used on the command line.
    std::string to_id_list() const {
      std::ostringstream os;
      bool               first = true;
      for (auto x : *this) {
        os << (first ? "" : " ") << x;
        first = false;
      }
      return os.str();
    }

   private:
    std::size_t            _universe = 0;
    std::vector<word_type> _words;
  };

}  // namespace edense

#endif  // EDENSE_ELEMENT_SET_HPP_

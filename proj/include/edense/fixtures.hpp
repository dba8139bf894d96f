#ifndef EDENSE_FIXTURES_HPP_
#define EDENSE_FIXTURES_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "semigroup.hpp"

// The frozen test corpus.  Tables are written out literally so that the
// constructions in construction.hpp can be checked against them.

namespace edense {

  namespace detail {
    inline FiniteSemigroup cyclic_group(std::size_t n) {
      CayleyTable              table(n, std::vector<ElementId>(n));
      std::vector<std::string> labels;
      for (ElementId i = 0; i < n; ++i) {
        for (ElementId j = 0; j < n; ++j) {
          table[i][j] = (i + j) % n;
        }
        labels.push_back(std::to_string(i));
      }
      return FiniteSemigroup::from_table(std::move(table), 0, std::move(labels));
    }

    // Z_n u eZ_n: ids 0..n-1 are the group, n + g is eg.
    inline FiniteSemigroup cyclic_with_band(std::size_t n) {
      CayleyTable              table(2 * n, std::vector<ElementId>(2 * n));
      std::vector<std::string> labels;
      for (ElementId i = 0; i < 2 * n; ++i) {
        for (ElementId j = 0; j < 2 * n; ++j) {
          table[i][j] = (i % n + j % n) % n + (i >= n || j >= n ? n : 0);
        }
      }
      for (ElementId g = 0; g < n; ++g) {
        labels.push_back(std::to_string(g));
      }
      for (ElementId g = 0; g < n; ++g) {
        labels.push_back("e" + std::to_string(g));
      }
      return FiniteSemigroup::from_table(std::move(table), 0, std::move(labels));
    }
  }  // namespace detail

  inline std::vector<std::string> const& fixture_names() {
    static std::vector<std::string> const names{
        "CHAIN3", "LZ2", "N2", "Z2", "Z3", "Z6", "T2", "B2", "Z3E", "Z6E"};
    return names;
  }

  inline FiniteSemigroup fixture(std::string_view name) {
    if (name == "CHAIN3") {
      // min on the chain 0 < 1 < 2
      return FiniteSemigroup::from_table({{0, 0, 0}, {0, 1, 1}, {0, 1, 2}});
    }
    if (name == "LZ2") {
      return FiniteSemigroup::from_table({{0, 0}, {1, 1}});
    }
    if (name == "N2") {
      // {0, a} with a^2 = 0
      return FiniteSemigroup::from_table({{0, 0}, {0, 0}}, {}, {"0", "a"});
    }
    if (name == "Z2") {
      return detail::cyclic_group(2);
    }
    if (name == "Z3") {
      return detail::cyclic_group(3);
    }
    if (name == "Z6") {
      return detail::cyclic_group(6);
    }
    if (name == "T2") {
      // maps of {0, 1} composed right to left
      return FiniteSemigroup::from_table(
          {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 2, 2, 2}, {3, 3, 3, 3}},
          0,
          {"id", "swap", "c0", "c1"});
    }
    if (name == "B2") {
      return FiniteSemigroup::from_table({{0, 0, 0, 0, 0},
                                          {0, 0, 3, 0, 1},
                                          {0, 4, 0, 2, 0},
                                          {0, 1, 0, 3, 0},
                                          {0, 0, 2, 0, 4}},
                                         {},
                                         {"0", "a", "a'", "aa'", "a'a"});
    }
    if (name == "Z3E") {
      return detail::cyclic_with_band(3);
    }
    if (name == "Z6E") {
      return detail::cyclic_with_band(6);
    }
    throw Error(ErrorCode::UnknownFixture,
                "no fixture named '" + std::string(name) + "'");
  }

  // Fixtures whose idempotents form a semilattice.
  inline std::vector<std::string> const& semilattice_fixture_names() {
    static std::vector<std::string> const names{"CHAIN3", "B2", "Z3E", "Z6E"};
    return names;
  }

}  // namespace edense

#endif  // EDENSE_FIXTURES_HPP_

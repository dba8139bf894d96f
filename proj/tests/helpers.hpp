#ifndef EDENSE_TESTS_HELPERS_HPP_
#define EDENSE_TESTS_HELPERS_HPP_

#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "edense/edense.hpp"
#include "oracle.hpp"

namespace testing {

  inline oracle::Set to_std(edense::ElementSet const& A) {
    return {A.begin(), A.end()};
  }

  inline oracle::Table raw(edense::FiniteSemigroup const& S) {
    return S.table();
  }

  template <typename F>
  std::optional<edense::ErrorCode> error_code_of(F&& f) {
    try {
      f();
    } catch (edense::Error const& e) {
      return e.code();
    }
    return std::nullopt;
  }

  // Every semigroup of order <= 3 followed by the named fixtures.
  inline std::vector<edense::FiniteSemigroup> const& corpus() {
    static std::vector<edense::FiniteSemigroup> const all = [] {
      std::vector<edense::FiniteSemigroup> v;
      for (std::size_t n = 1; n <= 3; ++n) {
        for (auto const& S : edense::all_semigroups(n)) {
          v.push_back(S);
        }
      }
      for (auto const& name : edense::fixture_names()) {
        v.push_back(edense::fixture(name));
      }
      return v;
    }();
    return all;
  }

}  // namespace testing

#endif  // EDENSE_TESTS_HELPERS_HPP_

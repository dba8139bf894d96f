#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace edense;
using testing::raw;
using testing::to_std;

TEST_CASE("closures of small sets", "[closures]") {
  auto const chain = fixture("CHAIN3");
  CHECK(to_std(omega_m(chain, ElementSet(3, {0}))) == oracle::Set{0, 1, 2});
  CHECK(omega_m(chain, ElementSet(3)).empty());
  CHECK(to_std(omega_m(fixture("Z6"), ElementSet(6, {2}))) == oracle::Set{2});

  auto const z3e = fixture("Z3E");
  CHECK(to_std(omega_h(z3e, idempotents(z3e))) == oracle::Set{0, 3});
  CHECK(to_std(omega_h(fixture("B2"), ElementSet(5, {3}))) == oracle::Set{3});
}

TEST_CASE("omega-hat agrees with the naive upward closure", "[closures]") {
  for (auto const& S : testing::corpus()) {
    auto const t = raw(S);
    auto const n = S.size();
    for (ElementId a = 0; a < n; ++a) {
      for (ElementId b = a; b < n; ++b) {
        ElementSet const A(n, {a, b});
        auto const       h = omega_h(S, A);
        CHECK(to_std(h) == oracle::omega_h(t, to_std(A)));
        CHECK(to_std(omega_m(S, A))
              == oracle::upward(t, to_std(A), oracle::mitsch));
        CHECK(A.is_subset_of(h));
        CHECK(h.is_subset_of(omega_m(S, A)));
      }
    }
  }
}

TEST_CASE("unitary subsets", "[closures]") {
  auto const z3e = fixture("Z3E");
  CHECK(is_unitary(z3e, ElementSet(6, {0, 3})));
  auto const b2 = fixture("B2");
  CHECK_FALSE(is_unitary(b2, idempotents(b2)));
  for (auto const& name : fixture_names()) {
    auto const S = fixture(name);
    CHECK(is_unitary(S, ElementSet::full(S.size())));
  }
}

TEST_CASE("E-dense subsemigroups", "[closures]") {
  for (auto const& name : fixture_names()) {
    auto const S = fixture(name);
    if (classify_idempotents(S).is_band) {
      CHECK(is_e_dense_subsemigroup(S, idempotents(S)));
    }
  }
  CHECK(is_e_dense_subsemigroup(fixture("Z3E"), ElementSet(6, {0, 1, 2})));
  CHECK_FALSE(is_e_dense_subsemigroup(fixture("N2"), ElementSet(2, {1})));
}

namespace {
  // H is closed E-dense when it is a subsemigroup, every h has a weak
  // inverse in H, and H is upward closed under the h-order.
  std::vector<oracle::Set> naive_closed_e_dense(oracle::Table const& t) {
    auto const               n = t.size();
    std::vector<oracle::Set> result;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      oracle::Set H;
      for (std::size_t k = 0; k < n; ++k) {
        if ((mask >> k) & 1U) {
          H.insert(k);
        }
      }
      bool ok = true;
      for (auto a : H) {
        for (auto b : H) {
          ok = ok && H.count(t[a][b]) > 0;
        }
        bool has_weak = false;
        for (auto w : oracle::weak_inverses(t, a)) {
          has_weak = has_weak || H.count(w) > 0;
        }
        ok = ok && has_weak;
      }
      if (ok && oracle::omega_h(t, H) == H) {
        result.push_back(H);
      }
    }
    return result;
  }
}  // namespace

TEST_CASE("closed E-dense subsemigroups by exhaustive scan", "[closures]") {
  auto const sets = [](std::string const& name) {
    std::set<oracle::Set> out;
    for (auto const& H : closed_e_dense_subsemigroups(fixture(name))) {
      out.insert(to_std(H));
    }
    return out;
  };
  CHECK(sets("B2") == std::set<oracle::Set>{{3}, {4}, {0, 1, 2, 3, 4}});
  CHECK(sets("Z3E")
        == std::set<oracle::Set>{{0}, {0, 1, 2}, {0, 3}, {0, 1, 2, 3, 4, 5}});
  CHECK(sets("CHAIN3") == std::set<oracle::Set>{{2}, {1, 2}, {0, 1, 2}});
  CHECK(sets("Z6")
        == std::set<oracle::Set>{
            {0}, {0, 3}, {0, 2, 4}, {0, 1, 2, 3, 4, 5}});
  CHECK(sets("N2") == std::set<oracle::Set>{{0, 1}});

  for (auto const& S : testing::corpus()) {
    if (!has_semilattice_of_idempotents(S)) {
      continue;
    }
    std::set<oracle::Set> got;
    for (auto const& H : closed_e_dense_subsemigroups(S)) {
      got.insert(to_std(H));
    }
    auto const expected = naive_closed_e_dense(raw(S));
    CHECK(got == std::set<oracle::Set>(expected.begin(), expected.end()));
  }
}

TEST_CASE("closed E-dense requirement names the failure", "[closures]") {
  auto const z3e = fixture("Z3E");
  CHECK_FALSE(closed_e_dense_failure(z3e, ElementSet(6, {1})).empty());
  CHECK_FALSE(closed_e_dense_failure(z3e, ElementSet(6, {3})).empty());
  CHECK(closed_e_dense_failure(z3e, ElementSet(6, {0, 3})).empty());
  CHECK(testing::error_code_of(
            [&] { require_closed_e_dense(z3e, ElementSet(6, {3})); })
        == ErrorCode::BadSubsemigroup);
  CHECK(testing::error_code_of([] {
          require_closed_e_dense(fixture("T2"), ElementSet(4, {0}));
        })
        == ErrorCode::NotSemilattice);
}

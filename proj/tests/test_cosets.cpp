#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "helpers.hpp"

using namespace edense;
using testing::error_code_of;
using testing::raw;
using testing::to_std;

namespace {
  bool naive_pi(oracle::Table const& t, oracle::Set const& H, std::size_t s,
                std::size_t u) {
    for (auto w : oracle::weak_inverses(t, s)) {
      if (H.count(t[w][u])) {
        return true;
      }
    }
    return false;
  }

  std::set<oracle::Set> naive_cosets(oracle::Table const& t,
                                     oracle::Set const&   H) {
    std::set<oracle::Set> out;
    for (std::size_t s = 0; s < t.size(); ++s) {
      if (!naive_pi(t, H, s, s)) {
        continue;
      }
      oracle::Set sH;
      for (auto h : H) {
        sH.insert(t[s][h]);
      }
      out.insert(oracle::omega_h(t, sH));
    }
    return out;
  }

  ElementSet const z3e_h{6, {0, 3}};
}  // namespace

TEST_CASE("pi_H on Z3E", "[cosets]") {
  auto const S = fixture("Z3E");
  CHECK(pi_h_related(S, z3e_h, 1, 4));
  CHECK_FALSE(pi_h_related(S, z3e_h, 1, 2));
  CHECK(pi_h_related(S, z3e_h, 0, 3));
  CHECK(pi_h_related(S, z3e_h, 3, 3));
}

TEST_CASE("cosets match the naive construction", "[cosets]") {
  for (auto const& S : testing::corpus()) {
    if (!has_semilattice_of_idempotents(S)) {
      continue;
    }
    auto const t = raw(S);
    for (auto const& H : closed_e_dense_subsemigroups(S)) {
      CosetSpace const space(S, H);
      std::set<oracle::Set> got;
      for (auto const& c : space.cosets()) {
        got.insert(to_std(c.members));
      }
      CHECK(got == naive_cosets(t, to_std(H)));
      for (ElementId s = 0; s < S.size(); ++s) {
        for (ElementId u = 0; u < S.size(); ++u) {
          CHECK(pi_h_related(S, H, s, u) == naive_pi(t, to_std(H), s, u));
        }
      }
    }
  }
}

TEST_CASE("single cosets", "[cosets]") {
  auto const S   = fixture("Z3E");
  auto const one = coset(S, z3e_h, 1);
  REQUIRE(one);
  CHECK(to_std(one->members) == oracle::Set{1, 4});
  CHECK(coset(S, z3e_h, 0)->members == z3e_h);
  CHECK(coset(S, z3e_h, 3)->members == z3e_h);
  CHECK_FALSE(coset(fixture("CHAIN3"), ElementSet(3, {2}), 0));
}

TEST_CASE("coset spaces", "[cosets]") {
  auto const z3e = coset_space(fixture("Z3E"), z3e_h);
  REQUIRE(z3e.size() == 3);
  CHECK(to_std(z3e.cosets()[0].members) == oracle::Set{0, 3});
  CHECK(to_std(z3e.cosets()[1].members) == oracle::Set{1, 4});
  CHECK(to_std(z3e.cosets()[2].members) == oracle::Set{2, 5});
  CHECK(z3e.base_point() == 0);

  CHECK(coset_space(fixture("Z6"), ElementSet(6, {0, 2, 4})).size() == 2);

  auto const chain = coset_space(fixture("CHAIN3"), ElementSet(3, {2}));
  CHECK(to_std(chain.domain()) == oracle::Set{2});
  CHECK(chain.size() == 1);

  CHECK(error_code_of([] {
          coset_space(fixture("Z3E"), ElementSet(6, {1}));
        })
        == ErrorCode::BadSubsemigroup);
}

TEST_CASE("conjugacy", "[cosets]") {
  auto const z6 = fixture("Z6");
  auto const H  = ElementSet(6, {0, 2, 4});
  CHECK(are_conjugate(z6, H, H));
  CHECK_FALSE(are_conjugate(z6, H, ElementSet(6, {0, 3})));

  auto const b2 = fixture("B2");
  auto const w  = are_conjugate(b2, ElementSet(5, {3}), ElementSet(5, {4}));
  REQUIRE(w);
  CHECK(weak_inverses(b2, w->element).contains(w->weak_inverse));
  CHECK(is_self_conjugate(fixture("Z3E"), z3e_h));
  for (auto const& H6 : closed_e_dense_subsemigroups(z6)) {
    CHECK(is_self_conjugate(z6, H6));
  }
  CHECK_FALSE(is_self_conjugate(b2, ElementSet(5, {3})));
  CHECK(error_code_of([&] { require_self_conjugate(b2, ElementSet(5, {3})); })
        == ErrorCode::NotSelfConjugate);
}

TEST_CASE("quotient groups and the rho representation", "[cosets]") {
  auto const S = fixture("Z3E");
  auto const Q = quotient_group(S, z3e_h);
  CHECK(is_group(Q));
  CHECK(find_semigroup_isomorphism(Q, fixture("Z3")));
  CHECK(find_semigroup_isomorphism(
      quotient_group(fixture("Z6"), ElementSet(6, {0, 3})), fixture("Z3")));
  CHECK(quotient_group(S, ElementSet::full(6)).size() == 1);

  auto const rho = rho_representation(S, z3e_h);
  CHECK(rho.domain == ElementSet::full(6));
  CHECK(rho.permutation[1] == std::vector<PointId>{1, 2, 0});
  for (auto h : z3e_h) {
    CHECK(rho.permutation[h] == std::vector<PointId>{0, 1, 2});
  }
  for (auto s : rho.domain) {
    for (auto u : rho.domain) {
      CHECK((rho.permutation[s] == rho.permutation[u])
            == pi_h_related(S, z3e_h, s, u));
    }
  }
}

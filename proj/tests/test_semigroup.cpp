#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>

#include "helpers.hpp"

using namespace edense;
using testing::error_code_of;
using testing::raw;
using testing::to_std;

TEST_CASE("tables are validated on construction", "[semigroup]") {
  auto chain = fixture("CHAIN3");
  CHECK(chain.size() == 3);
  CHECK(chain.identity() == std::optional<ElementId>{2});

  auto z2 = FiniteSemigroup::from_table({{0, 1}, {1, 0}});
  CHECK(z2.identity() == std::optional<ElementId>{0});
  CHECK(is_group(z2));

  try {
    FiniteSemigroup::from_table({{1, 1}, {1, 0}});
    FAIL("accepted a non-associative table");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::NonAssociative);
    REQUIRE(e.witness().size() == 3);
    auto const& w = e.witness();
    oracle::Table t{{1, 1}, {1, 0}};
    CHECK(t[t[w[0]][w[1]]][w[2]] != t[w[0]][t[w[1]][w[2]]]);
  }

  CHECK(error_code_of([] { FiniteSemigroup::from_table({}); })
        == ErrorCode::MalformedTable);
  CHECK(error_code_of([] { FiniteSemigroup::from_table({{0, 0}, {0}}); })
        == ErrorCode::MalformedTable);
  CHECK(error_code_of([] { FiniteSemigroup::from_table({{0, 2}, {0, 0}}); })
        == ErrorCode::OutOfRangeEntry);
  CHECK(error_code_of([] { FiniteSemigroup::from_table({{0, 0}, {0, 0}}, 1); })
        == ErrorCode::BadIdentityHint);
}

TEST_CASE("Cayley table text round-trips", "[semigroup][io]") {
  for (auto const& name : fixture_names()) {
    auto const S    = fixture(name);
    auto const back = parse_cayley_table(format_cayley_table(S));
    CHECK(back.table() == S.table());
    CHECK(back.identity() == S.identity());
  }
  auto const S = parse_cayley_table("# chain\n3\n0 0 0\n0 1 1 # row 1\n\n0 1 2\n"
                                    "identity 2\n");
  CHECK(S.table() == fixture("CHAIN3").table());

  try {
    parse_cayley_table("3\n0 0 0\n0 1\n0 1 2\n");
    FAIL("accepted a short row");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(e.witness() == std::vector<std::size_t>{3});
  }
  CHECK(error_code_of([] { parse_cayley_table("2\n0 x\n0 0\n"); })
        == ErrorCode::ParseError);
  CHECK(error_code_of([] { parse_cayley_table("2\n0 0\n"); })
        == ErrorCode::ParseError);
  CHECK(error_code_of([] { parse_cayley_table("2\n1 1\n1 0\n"); })
        == ErrorCode::NonAssociative);
}

TEST_CASE("idempotents and their classification", "[semigroup]") {
  CHECK(to_std(idempotents(fixture("CHAIN3"))) == oracle::Set{0, 1, 2});
  CHECK(to_std(idempotents(fixture("Z3E"))) == oracle::Set{0, 3});
  CHECK(to_std(idempotents(fixture("Z6"))) == oracle::Set{0});

  auto t2 = classify_idempotents(fixture("T2"));
  CHECK(t2.is_band);
  CHECK_FALSE(t2.is_semilattice);
  auto z3e = classify_idempotents(fixture("Z3E"));
  CHECK((z3e.is_band && z3e.is_semilattice));
  auto b2 = classify_idempotents(fixture("B2"));
  CHECK((b2.is_band && b2.is_semilattice));
  CHECK(idempotents(fixture("B2")).size() == 3);
}

TEST_CASE("weak inverses, inverses and left pre-inverses", "[semigroup]") {
  auto const z6 = fixture("Z6");
  auto const s  = inverse_sets(z6, 2);
  CHECK(to_std(s.weak) == oracle::Set{4});
  CHECK(to_std(s.inverse) == oracle::Set{4});
  CHECK(to_std(s.left_pre) == oracle::Set{4});

  auto const lz = fixture("LZ2");
  for (ElementId a = 0; a < 2; ++a) {
    CHECK(to_std(weak_inverses(lz, a)) == oracle::Set{0, 1});
    CHECK(to_std(inverses(lz, a)) == oracle::Set{0, 1});
  }
  CHECK(to_std(weak_inverses(fixture("Z3E"), 1)) == oracle::Set{2, 5});
  CHECK(to_std(weak_inverses(fixture("B2"), 1)) == oracle::Set{0, 2});

  for (auto const& S : testing::corpus()) {
    auto const t = raw(S);
    for (ElementId a = 0; a < S.size(); ++a) {
      auto const sets = inverse_sets(S, a);
      CHECK(to_std(sets.weak) == oracle::weak_inverses(t, a));
      CHECK(to_std(sets.inverse) == oracle::inverses(t, a));
      CHECK(to_std(sets.left_pre) == oracle::left_pre_inverses(t, a));
    }
  }
}

TEST_CASE("Mitsch and h orders agree with witness search", "[semigroup]") {
  CHECK(mitsch_leq(fixture("CHAIN3"), 0, 2));
  CHECK_FALSE(mitsch_leq(fixture("Z6"), 1, 2));
  CHECK(h_leq(fixture("Z3E"), 3, 0));
  CHECK(h_leq(fixture("CHAIN3"), 0, 2));
  CHECK_FALSE(h_leq(fixture("Z6"), 1, 2));
  for (auto const& S : testing::corpus()) {
    auto const t = raw(S);
    for (ElementId a = 0; a < S.size(); ++a) {
      CHECK(mitsch_leq(S, a, a));
      for (ElementId b = 0; b < S.size(); ++b) {
        CHECK(mitsch_leq(S, a, b) == oracle::mitsch(t, a, b));
        CHECK(h_leq(S, a, b) == oracle::h_order(t, a, b));
      }
    }
  }
}

TEST_CASE("L-classes and regular elements", "[semigroup]") {
  auto const b2 = fixture("B2");
  CHECK(to_std(green_l_class(b2, 3)) == oracle::Set{2, 3});
  CHECK(green_l_class(fixture("Z6"), 4) == ElementSet::full(6));
  CHECK(to_std(green_l_class(fixture("CHAIN3"), 1)) == oracle::Set{1});

  CHECK(regular_elements(b2) == ElementSet::full(5));
  CHECK(regular_elements(fixture("Z6")) == ElementSet::full(6));
  CHECK(to_std(regular_elements(fixture("N2"))) == oracle::Set{0});
  CHECK(is_inverse_semigroup(b2));
}

TEST_CASE("global predicates on the fixtures", "[semigroup]") {
  for (auto const& name : fixture_names()) {
    CHECK(is_e_dense(fixture(name)));
  }
  CHECK(is_e_dense(FiniteSemigroup::from_table({{0}})));

  CHECK(is_group(fixture("Z6")));
  CHECK(is_e_unitary(fixture("Z6")));
  CHECK_FALSE(is_group(fixture("Z3E")));
  CHECK(is_e_unitary(fixture("Z3E")));
  CHECK_FALSE(is_group(fixture("B2")));
  CHECK_FALSE(is_e_unitary(fixture("B2")));
}

TEST_CASE("enumeration matches the brute-force magma filter",
          "[semigroup][enumeration]") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto const expected = oracle::associative_tables(n);
    std::set<oracle::Table> got;
    for (auto const& S : all_semigroups(n)) {
      got.insert(S.table());
    }
    CHECK(got.size() == all_semigroups(n).size());
    CHECK(got == std::set<oracle::Table>(expected.begin(), expected.end()));
  }
  CHECK(all_semigroups(1).size() == 1);
  CHECK(all_semigroups(2).size() == 8);
  CHECK(all_semigroups(3).size() == 113);
  CHECK(error_code_of([] { all_semigroups(4); }) == ErrorCode::OrderTooLarge);
}

TEST_CASE("isomorphism search", "[semigroup]") {
  auto const z3 = fixture("Z3");
  FiniteSemigroup const relabelled
      = FiniteSemigroup::from_table({{1, 2, 0}, {2, 0, 1}, {0, 1, 2}});
  auto const f = find_semigroup_isomorphism(z3, relabelled);
  REQUIRE(f);
  CHECK(is_isomorphism(z3, relabelled, *f));
  CHECK_FALSE(find_semigroup_isomorphism(z3, fixture("CHAIN3")));
  CHECK_FALSE(find_semigroup_isomorphism(fixture("LZ2"), fixture("Z2")));
}

TEST_CASE("fixtures", "[semigroup][fixtures]") {
  CHECK(fixture("B2").size() == 5);
  CHECK(fixture("Z3E").size() == 6);
  CHECK(fixture("Z6E").size() == 12);
  CHECK(to_std(idempotents(fixture("Z6E"))) == oracle::Set{0, 6});
  CHECK(error_code_of([] { fixture("Q8"); }) == ErrorCode::UnknownFixture);
  for (auto const& name : semilattice_fixture_names()) {
    CHECK(has_semilattice_of_idempotents(fixture(name)));
  }
}

#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "helpers.hpp"

using namespace edense;
using testing::error_code_of;
using testing::to_std;

namespace {
  TotalAct eg_act() {
    return left_ideal_act(fixture("Z3E"), ElementSet(6, {3, 4, 5}));
  }

  // Two disjoint copies of eG.
  TotalAct doubled_eg() {
    auto const X = eg_act();
    TotalAct   Y{X.semigroup, {}, {}};
    Y.table.assign(X.semigroup.size(), std::vector<PointId>(6));
    for (ElementId s = 0; s < X.semigroup.size(); ++s) {
      for (PointId x = 0; x < 3; ++x) {
        Y.table[s][x]     = X(s, x);
        Y.table[s][x + 3] = X(s, x) + 3;
      }
    }
    return Y;
  }

  std::uint64_t residue(ModexpSystem const& sys, PointId x) {
    return sys.residues[x];
  }
}  // namespace

TEST_CASE("cryptosystems need cancellative acts", "[crypto]") {
  CHECK_NOTHROW(build_cryptosystem(eg_act(), 1));
  auto const p7 = modexp_system(7);
  CHECK_NOTHROW(build_cryptosystem(p7.act, *p7.element_of(5)));
  CHECK(error_code_of([] { build_cryptosystem(regular_act(fixture("N2")), 1); })
        == ErrorCode::NotCancellative);
  CHECK(error_code_of([] { build_cryptosystem(eg_act(), 6); })
        == ErrorCode::OutOfRangeEntry);
}

TEST_CASE("decrypt key spaces on Z3E acting on eG", "[crypto]") {
  auto const X = eg_act();
  auto const S = X.semigroup;
  CHECK(to_std(decrypt_key_space(build_cryptosystem(X, 1), 0))
        == oracle::Set{2, 5});
  // (ts)x = x read off the table: t s must be congruent to 0 mod 3
  for (ElementId s = 0; s < 6; ++s) {
    for (PointId x = 0; x < 3; ++x) {
      oracle::Set expected;
      for (ElementId t = 0; t < 6; ++t) {
        if ((t % 3 + s % 3) % 3 == 0) {
          expected.insert(t);
        }
      }
      CHECK(to_std(decrypt_key_space(X, s, x)) == expected);
    }
  }
  CHECK(to_std(locally_free_key_space(X, 1, 0)) == oracle::Set{2, 5});
  CHECK(decrypt_key(X, 1) == 2);
}

TEST_CASE("locally free key spaces", "[crypto]") {
  auto const S6 = fixture("Z6E");
  auto const X  = left_ideal_act(S6, ElementSet(12, {6, 7, 8, 9, 10, 11}));
  for (ElementId s = 0; s < 12; ++s) {
    for (PointId x = 0; x < 6; ++x) {
      CHECK(locally_free_key_space(X, s, x).size() == 2);
    }
  }
  auto const Z = regular_act(fixture("Z6"));
  for (ElementId s = 0; s < 6; ++s) {
    CHECK(to_std(locally_free_key_space(Z, s, 0))
          == oracle::Set{(6 - s) % 6});
  }
  CHECK(error_code_of([] {
          auto const B = fixture("B2");
          locally_free_key_space(left_ideal_act(B, ElementSet(5, {0})), 1, 0);
        })
        == ErrorCode::PreconditionFailed);
}

TEST_CASE("key space theorem reports", "[crypto]") {
  auto const check_all = [](TotalAct const& X, std::set<std::string> expect) {
    for (ElementId s = 0; s < X.semigroup.size(); ++s) {
      for (PointId x = 0; x < X.carrier_size(); ++x) {
        auto const            r = verify_key_space_theorem(X, s, x);
        std::set<std::string> names;
        for (auto const& f : r.findings) {
          CHECK(f.pass);
          names.insert(f.name);
        }
        CHECK(names == expect);
      }
    }
  };
  std::string const p1 = "K(s,x) is omega_m-closed";
  std::string const p2 = "(S_x W(s) S_sx) omega_m is inside K(s,x)";
  std::string const p3 = "band E: K(s,x) = (S_x W(s) S_sx) omega-hat";
  std::string const p4 = "inverse S: K(s,x) = (S_x s^-1) omega-hat";
  std::string const p5 = "group S: K(s,x) = S_x s^-1 and |K| = |S_x|";
  check_all(eg_act(), {p1, p2, p3, p4});
  check_all(regular_act(fixture("Z6")), {p1, p2, p3, p4, p5});
  check_all(left_ideal_act(fixture("B2"), ElementSet(5, {0})),
            {p1, p2, p3, p4});
}

TEST_CASE("modular exponentiation systems", "[crypto][modexp]") {
  auto const p7 = modexp_system(7);
  CHECK(p7.act.semigroup.size() == 2);
  CHECK(p7.act.carrier_size() == 6);
  CHECK(modexp_system(11).exponents == std::vector<std::uint64_t>{1, 3, 7, 9});
  CHECK(modexp_system(3).exponents == std::vector<std::uint64_t>{1});
  CHECK(error_code_of([] { modexp_system(4); }) == ErrorCode::NotPrime);
  CHECK(error_code_of([] { modexp_system(1); }) == ErrorCode::NotPrime);
  CHECK(error_code_of([] { modexp_system(263); })
        == ErrorCode::PreconditionFailed);

  for (std::uint64_t p : {3, 5, 7, 11, 13, 23}) {
    auto const sys = modexp_system(p);
    for (ElementId a = 0; a < sys.exponents.size(); ++a) {
      for (PointId x = 0; x < sys.residues.size(); ++x) {
        CHECK(residue(sys, sys.act(a, x))
              == oracle::power_mod(residue(sys, x), sys.exponents[a], p));
      }
    }
    // 1 and p - 1 are fixed by every odd exponent, so only p = 3 is free
    CHECK(sys.is_free == (p == 3));
  }
}

TEST_CASE("modexp key spaces", "[crypto][modexp]") {
  auto const sys  = modexp_system(7);
  auto const five = *sys.element_of(5);
  for (PointId x = 0; x < 6; ++x) {
    auto const v = residue(sys, x);
    oracle::Set expected;
    for (ElementId t = 0; t < 2; ++t) {
      auto const e = sys.exponents[t] * 5 % 6;
      if (oracle::power_mod(v, e, 7) == v) {
        expected.insert(t);
      }
    }
    CHECK(to_std(decrypt_key_space(sys.act, five, x)) == expected);
    CHECK(decrypt_key_space(sys.act, five, x).contains(five));
  }
  CHECK(to_std(uniform_decrypt_keys(sys.act, five)) == oracle::Set{five});
}

TEST_CASE("Massey-Omura", "[crypto][protocol]") {
  auto const sys = modexp_system(11);
  auto const tr  = massey_omura(sys.act, *sys.point_of(2), *sys.element_of(3),
                                *sys.element_of(9));
  std::vector<std::uint64_t> wire;
  for (auto m : tr.messages) {
    wire.push_back(residue(sys, m));
  }
  CHECK(wire == std::vector<std::uint64_t>{8, 7, 6});
  CHECK(residue(sys, tr.recovered) == 2);
  CHECK(tr.success());
  CHECK(tr.render()
        == "alice: sends s x = 8\nbob: sends t (s x) = 7\n"
           "alice: sends s^-1 (t s x) = 6\nbob: recovered = 2\n");

  auto const one  = *sys.element_of(1);
  auto const echo = massey_omura(sys.act, 4, one, one);
  for (auto m : echo.messages) {
    CHECK(m == 4);
  }

  auto const X = eg_act();
  auto const z = massey_omura(X, 1, 1, 2);
  CHECK(z.recovered == 1);
  CHECK(X.point_label(z.recovered) == "e1");

  CHECK(error_code_of([] {
          massey_omura(regular_act(fixture("T2")), 0, 0, 0);
        })
        == ErrorCode::PreconditionFailed);
}

TEST_CASE("biact Massey-Omura", "[crypto][protocol]") {
  auto const X = eg_act();
  BiactTable B{X, std::vector<std::vector<PointId>>(3, std::vector<PointId>(6))};
  for (PointId x = 0; x < 3; ++x) {
    for (ElementId t = 0; t < 6; ++t) {
      B.right[x][t] = X.semigroup(x + 3, t) - 3;
    }
  }
  CHECK_NOTHROW(check_biact(B));
  for (PointId x = 0; x < 3; ++x) {
    for (ElementId s = 0; s < 6; ++s) {
      for (ElementId t = 0; t < 6; ++t) {
        CHECK(massey_omura(B, x, s, t).success());
      }
    }
  }
  B.right[0][1] = 0;
  CHECK(error_code_of([&] { check_biact(B); }));
}

TEST_CASE("ElGamal", "[crypto][protocol]") {
  auto const sys = modexp_system(11);
  auto const tr  = elgamal(sys.act, *sys.point_of(2), *sys.element_of(3),
                           *sys.element_of(7), *sys.element_of(9));
  CHECK(residue(sys, tr.messages[0]) == 6);
  CHECK(residue(sys, tr.recovered) == 2);
  CHECK(tr.render()
        == "bob: publishes s d = 7\nalice: sends (c (s d)) x = 6\n"
           "alice: sends c s = 1\nbob: computes (c s) d = 9\n"
           "bob: recovered = 2\n");

  auto const one = *sys.element_of(1);
  auto const id  = elgamal(sys.act, 5, one, one, one);
  CHECK(id.messages[0] == 5);

  auto const X = eg_act();
  for (PointId x = 0; x < 3; ++x) {
    CHECK(elgamal(X, x, 1, 2, 4).success());
  }
}

TEST_CASE("seeded key draws", "[crypto]") {
  auto const keys = ElementSet(6, {0, 1, 2, 3});
  CHECK(draw_keys(keys, 5, 7) == draw_keys(keys, 5, 7));
  for (auto k : draw_keys(keys, 20, 1)) {
    CHECK(keys.contains(k));
  }
  CHECK(error_code_of([] { draw_keys(ElementSet(3), 1, 0); })
        == ErrorCode::NoDecryptKey);
  CHECK(usable_keys(eg_act()) == ElementSet::full(6));
}

TEST_CASE("left density of stabilizers", "[crypto]") {
  CHECK(stabilizers_left_dense(modexp_system(7).act).holds);
  CHECK(stabilizers_left_dense(eg_act()).holds);
  auto const n2 = stabilizers_left_dense(regular_act(fixture("N2")));
  CHECK_FALSE(n2.holds);
  CHECK(n2.witness.size() == 2);
}

TEST_CASE("classification of locally free cryptosystems", "[crypto]") {
  auto const one = classify_locally_free_cryptosystem(eg_act());
  CHECK(one.minimum_idempotent == 3);
  CHECK(one.cyclic_points == std::vector<ElementId>{3, 4, 5});
  CHECK(one.copies == 1);
  CHECK(one.decomposes);

  auto const two = classify_locally_free_cryptosystem(doubled_eg());
  CHECK(two.copies == 2);
  CHECK(two.decomposes);

  // U_7 under U_6: orbits {1}, {6}, {2,4}, {3,5}; only the two free orbits
  // are copies of U_6
  auto const p7 = classify_locally_free_cryptosystem(modexp_system(7).act);
  CHECK(p7.minimum_idempotent == 0);
  CHECK(p7.orbits.size() == 4);
  CHECK(p7.copies == 2);
  CHECK_FALSE(p7.decomposes);
  CHECK_FALSE(p7.locally_free);

  CHECK(error_code_of([] {
          classify_locally_free_cryptosystem(regular_act(fixture("T2")));
        })
        == ErrorCode::NotSemilattice);
}

#ifndef EDENSE_CRYPTO_HPP_
#define EDENSE_CRYPTO_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "acts.hpp"
#include "closures.hpp"
#include "core.hpp"
#include "cosets.hpp"
#include "element_set.hpp"
#include "error.hpp"
#include "report.hpp"
#include "semigroup.hpp"

namespace edense {

  ////////////////////////////////////////////////////////////////////////
  // Cancellative total acts
  ////////////////////////////////////////////////////////////////////////

  // Witness (s, x, y) with sx = sy and x != y, if any.
  inline std::optional<std::vector<std::size_t>>
  cancellation_failure(TotalAct const& X) {
    for (ElementId s = 0; s < X.semigroup.size(); ++s) {
      for (PointId x = 0; x < X.carrier_size(); ++x) {
        for (PointId y = x + 1; y < X.carrier_size(); ++y) {
          if (X(s, x) == X(s, y)) {
            return std::vector<std::size_t>{s, x, y};
          }
        }
      }
    }
    return std::nullopt;
  }

  inline bool is_cancellative(TotalAct const& X) {
    return !cancellation_failure(X).has_value();
  }

  // S_x = {s | sx = x}
  inline ElementSet stabilizer(TotalAct const& X, PointId x) {
    ElementSet result(X.semigroup.size());
    for (ElementId s = 0; s < X.semigroup.size(); ++s) {
      if (X(s, x) == x) {
        result.insert(s);
      }
    }
    return result;
  }

  //! A total act read as a partial one; true iff it passes the E-dense act
  //! axioms with D_s = X for every s.
  inline bool is_e_dense_total_act(TotalAct const& X) {
    try {
      as_partial_act(X);
      return true;
    } catch (Error const&) {
      return false;
    }
  }

  struct Cryptosystem {
    TotalAct  act;
    ElementId key;  // the cipher key s
  };

  //! Throws NotAssociativeAction (s, t, x) or NotCancellative (s, x, y).
  //! Also checks that the act is E-dense with every D_s = X.
  inline Cryptosystem build_cryptosystem(TotalAct X, ElementId s) {
    check_total_act(X);
    if (s >= X.semigroup.size()) {
      throw Error(ErrorCode::OutOfRangeEntry, "cipher key out of range", {s});
    }
    if (auto w = cancellation_failure(X)) {
      throw Error(ErrorCode::NotCancellative, "sx = sy with x != y", *w);
    }
    if (!is_e_dense_total_act(X)) {
      throw Error(ErrorCode::InternalInconsistency,
                  "cancellative total act is not an E-dense act");
    }
    return {std::move(X), s};
  }

  ////////////////////////////////////////////////////////////////////////
  // Decrypt key spaces
  ////////////////////////////////////////////////////////////////////////

  // K(s, x) = {t | (ts)x = x}
  inline ElementSet decrypt_key_space(TotalAct const& X,
                                      ElementId       s,
                                      PointId         x) {
    auto const& S = X.semigroup;
    ElementSet  result(S.size());
    for (ElementId t = 0; t < S.size(); ++t) {
      if (X(S(t, s), x) == x) {
        result.insert(t);
      }
    }
    return result;
  }

  inline ElementSet decrypt_key_space(Cryptosystem const& sys, PointId x) {
    return decrypt_key_space(sys.act, sys.key, x);
  }

  // Keys t with (ts)x = x for every x.
  inline ElementSet uniform_decrypt_keys(TotalAct const& X, ElementId s) {
    auto result = ElementSet::full(X.semigroup.size());
    for (PointId x = 0; x < X.carrier_size(); ++x) {
      result &= decrypt_key_space(X, s, x);
    }
    return result;
  }

  // Least uniform decrypt key of s; throws NoDecryptKey when there is none.
  inline ElementId decrypt_key(TotalAct const& X, ElementId s) {
    auto const keys = uniform_decrypt_keys(X, s);
    if (keys.empty()) {
      throw Error(ErrorCode::NoDecryptKey,
                  "no t with (ts)x = x for every x",
                  {s});
    }
    return keys.front();
  }

  namespace detail {
    // {abc | a in A, b in B, c in C}
    inline ElementSet triple_product(FiniteSemigroup const& S,
                                     ElementSet const&      A,
                                     ElementSet const&      B,
                                     ElementSet const&      C) {
      ElementSet result(S.size());
      for (auto a : A) {
        for (auto b : B) {
          for (auto c : C) {
            result.insert(S(a, b, c));
          }
        }
      }
      return result;
    }
  }  // namespace detail

  //! Evaluates the closure description of K(s, x): omega_m-closed;
  //! contains (S_x W(s) S_sx) omega_m; equal to (S_x W(s) S_sx) omega-hat when
  //! E is a band; equal to (S_x s^{-1}) omega-hat for inverse S; equal to
  //! S_x s^{-1} of size |S_x| for groups.  Inapplicable parts are omitted.
  inline Report verify_key_space_theorem(TotalAct const& X,
                                         ElementId       s,
                                         PointId         x) {
    auto const& S   = X.semigroup;
    auto const  K   = decrypt_key_space(X, s, x);
    auto const  Sx  = stabilizer(X, x);
    auto const  Ssx = stabilizer(X, X(s, x));
    auto const  mid = detail::triple_product(S, Sx, weak_inverses(S, s), Ssx);
    auto const  tag = "s=" + std::to_string(s) + " x=" + std::to_string(x);
    auto const  got = [&](ElementSet const& A) {
      return tag + " K=" + K.to_string() + " other=" + A.to_string();
    };

    Report report;
    auto const Km = omega_m(S, K);
    report.add("K(s,x) is omega_m-closed", Km == K, got(Km));
    auto const mid_m = omega_m(S, mid);
    report.add("(S_x W(s) S_sx) omega_m is inside K(s,x)",
               mid_m.is_subset_of(K),
               got(mid_m));
    if (has_band_of_idempotents(S)) {
      auto const mid_h = omega_h(S, mid);
      report.add("band E: K(s,x) = (S_x W(s) S_sx) omega-hat",
                 mid_h == K,
                 got(mid_h));
    }
    if (is_inverse_semigroup(S)) {
      auto const inv = *unique_inverse(S, s);
      ElementSet Sx_inv(S.size());
      for (auto a : Sx) {
        Sx_inv.insert(S(a, inv));
      }
      auto const closed = omega_h(S, Sx_inv);
      report.add("inverse S: K(s,x) = (S_x s^-1) omega-hat",
                 closed == K,
                 got(closed));
      if (is_group(S)) {
        report.add("group S: K(s,x) = S_x s^-1 and |K| = |S_x|",
                   Sx_inv == K && K.size() == Sx.size(),
                   got(Sx_inv));
      }
    }
    return report;
  }

  //! For E-unitary S with semilattice E acting locally freely and
  //! cancellatively: K(s, x) = W(s) omega-hat = L(s).  Throws
  //! PreconditionFailed naming the missing hypothesis.
  inline ElementSet locally_free_key_space(TotalAct const& X,
                                           ElementId       s,
                                           PointId         x) {
    auto const& S = X.semigroup;
    if (!has_semilattice_of_idempotents(S)) {
      throw Error(ErrorCode::PreconditionFailed,
                  "idempotents do not form a semilattice");
    }
    if (!is_e_unitary(S)) {
      throw Error(ErrorCode::PreconditionFailed, "semigroup is not E-unitary");
    }
    if (!is_cancellative(X)) {
      throw Error(ErrorCode::PreconditionFailed, "act is not cancellative");
    }
    if (!is_locally_free(as_partial_act(X))) {
      throw Error(ErrorCode::PreconditionFailed, "act is not locally free");
    }
    auto const K = decrypt_key_space(X, s, x);
    if (K != omega_h(S, weak_inverses(S, s))
        || K != left_pre_inverses(S, s)) {
      throw Error(ErrorCode::InternalInconsistency,
                  "K(s,x) differs from W(s) omega-hat or L(s)",
                  {s, x});
    }
    return K;
  }

  ////////////////////////////////////////////////////////////////////////
  // Protocols
  ////////////////////////////////////////////////////////////////////////

  struct TranscriptEntry {
    std::string party;
    std::string kind;
    std::string value;
  };

  struct ProtocolTranscript {
    std::vector<TranscriptEntry> entries;
    std::vector<PointId>         messages;  // points sent over the wire
    PointId                      plaintext;
    PointId                      recovered;

    bool success() const noexcept {
      return plaintext == recovered;
    }

    // "party: kind = value", one line per entry
    std::string render() const {
      std::ostringstream os;
      for (auto const& e : entries) {
        os << e.party << ": " << e.kind << " = " << e.value << '\n';
      }
      return os.str();
    }
  };

  //! Commutative Massey-Omura: Alice sends sx, Bob returns t(sx), Alice
  //! strips her key with a uniform decrypt key of s, Bob strips his.
  inline ProtocolTranscript massey_omura(TotalAct const& X,
                                         PointId         x,
                                         ElementId       s,
                                         ElementId       t) {
    auto const& S = X.semigroup;
    if (!is_commutative(S)) {
      throw Error(ErrorCode::PreconditionFailed,
                  "commutative Massey-Omura needs a commutative semigroup; "
                  "use the biact variant");
    }
    auto const s_inv = decrypt_key(X, s);
    auto const t_inv = decrypt_key(X, t);

    ProtocolTranscript tr{{}, {}, x, x};
    auto const         c1 = X(s, x);
    auto const         c2 = X(t, c1);
    auto const         c3 = X(s_inv, c2);
    tr.recovered          = X(t_inv, c3);
    tr.messages           = {c1, c2, c3};
    tr.entries = {{"alice", "sends s x", X.point_label(c1)},
                  {"bob", "sends t (s x)", X.point_label(c2)},
                  {"alice", "sends s^-1 (t s x)", X.point_label(c3)},
                  {"bob", "recovered", X.point_label(tr.recovered)}};
    return tr;
  }

  //! A left and a right action of S on the same points with (sx)t = s(xt).
  struct BiactTable {
    TotalAct                          left;
    std::vector<std::vector<PointId>> right;  // right[x][t] = xt

    PointId operator()(PointId x, ElementId t) const {
      return right[x][t];
    }
  };

  //! Throws NotAssociativeAction, NotCancellative or PreconditionFailed
  //! (compatibility) with witnesses.
  inline void check_biact(BiactTable const& B) {
    auto const& S = B.left.semigroup;
    auto const  m = B.left.carrier_size();
    check_total_act(B.left);
    if (auto w = cancellation_failure(B.left)) {
      throw Error(ErrorCode::NotCancellative, "left action: sx = sy", *w);
    }
    if (B.right.size() != m) {
      throw Error(ErrorCode::MalformedTable, "right action needs m rows");
    }
    for (PointId x = 0; x < m; ++x) {
      if (B.right[x].size() != S.size()) {
        throw Error(ErrorCode::MalformedTable, "ragged right action", {x});
      }
      for (auto y : B.right[x]) {
        if (y >= m) {
          throw Error(ErrorCode::OutOfRangeEntry, "right action entry", {x, y});
        }
      }
    }
    for (PointId x = 0; x < m; ++x) {
      for (ElementId s = 0; s < S.size(); ++s) {
        for (ElementId t = 0; t < S.size(); ++t) {
          if (B(B(x, s), t) != B(x, S(s, t))) {
            throw Error(ErrorCode::NotAssociativeAction,
                        "right action: (xs)t != x(st)",
                        {x, s, t});
          }
          if (B(B.left(s, x), t) != B.left(s, B(x, t))) {
            throw Error(ErrorCode::PreconditionFailed,
                        "biact compatibility (sx)t = s(xt) fails",
                        {s, x, t});
          }
        }
      }
    }
    for (ElementId t = 0; t < S.size(); ++t) {
      for (PointId x = 0; x < m; ++x) {
        for (PointId y = x + 1; y < m; ++y) {
          if (B(x, t) == B(y, t)) {
            throw Error(ErrorCode::NotCancellative,
                        "right action: xt = yt",
                        {t, x, y});
          }
        }
      }
    }
  }

  // Least k with (xt)k = x for every x.
  inline ElementId right_decrypt_key(BiactTable const& B, ElementId t) {
    auto const& S = B.left.semigroup;
    for (ElementId k = 0; k < S.size(); ++k) {
      bool ok = true;
      for (PointId x = 0; x < B.left.carrier_size() && ok; ++x) {
        ok = B(B(x, t), k) == x;
      }
      if (ok) {
        return k;
      }
    }
    throw Error(ErrorCode::NoDecryptKey, "no right decrypt key", {t});
  }

  //! Biact Massey-Omura: Alice sends sx, Bob returns (sx)t, Alice removes s
  //! on the left, Bob removes t on the right.
  inline ProtocolTranscript massey_omura(BiactTable const& B,
                                         PointId           x,
                                         ElementId         s,
                                         ElementId         t) {
    check_biact(B);
    auto const& X     = B.left;
    auto const  s_inv = decrypt_key(X, s);
    auto const  t_inv = right_decrypt_key(B, t);

    ProtocolTranscript tr{{}, {}, x, x};
    auto const         c1 = X(s, x);
    auto const         c2 = B(c1, t);
    auto const         c3 = X(s_inv, c2);
    tr.recovered          = B(c3, t_inv);
    tr.messages           = {c1, c2, c3};
    tr.entries = {{"alice", "sends s x", X.point_label(c1)},
                  {"bob", "sends (s x) t", X.point_label(c2)},
                  {"alice", "sends s^-1 (s x t)", X.point_label(c3)},
                  {"bob", "recovered", X.point_label(tr.recovered)}};
    return tr;
  }

  //! Generalised ElGamal with public s: Bob publishes sd, Alice sends
  //! ((c(sd))x, cs), Bob forms (cs)d = c(sd) and applies its decrypt key.
  inline ProtocolTranscript elgamal(TotalAct const& X,
                                    PointId         x,
                                    ElementId       s,
                                    ElementId       c,
                                    ElementId       d) {
    auto const& S       = X.semigroup;
    auto const  sd      = S(s, d);
    auto const  csd     = S(c, sd);
    auto const  cs      = S(c, s);
    auto const  shared  = S(cs, d);
    auto const  key     = decrypt_key(X, shared);
    auto const  cipher  = X(csd, x);

    ProtocolTranscript tr{{}, {}, x, x};
    tr.recovered = X(key, cipher);
    tr.messages  = {cipher};
    tr.entries   = {{"bob", "publishes s d", S.label(sd)},
                    {"alice", "sends (c (s d)) x", X.point_label(cipher)},
                    {"alice", "sends c s", S.label(cs)},
                    {"bob", "computes (c s) d", S.label(shared)},
                    {"bob", "recovered", X.point_label(tr.recovered)}};
    return tr;
  }

  //! Draws count keys uniformly from candidates using mt19937_64 seeded with
  //! seed, so transcripts are reproducible.
  inline std::vector<ElementId> draw_keys(ElementSet const& candidates,
                                          std::size_t       count,
                                          std::uint64_t     seed) {
    if (candidates.empty()) {
      throw Error(ErrorCode::NoDecryptKey, "no usable keys to draw from");
    }
    auto const                                 pool = candidates.members();
    std::mt19937_64                            rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::vector<ElementId>                     keys;
    for (std::size_t i = 0; i < count; ++i) {
      keys.push_back(pool[pick(rng)]);
    }
    return keys;
  }

  // Elements with a uniform decrypt key.
  inline ElementSet usable_keys(TotalAct const& X) {
    ElementSet result(X.semigroup.size());
    for (ElementId s = 0; s < X.semigroup.size(); ++s) {
      if (!uniform_decrypt_keys(X, s).empty()) {
        result.insert(s);
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Modular exponentiation
  ////////////////////////////////////////////////////////////////////////

  inline constexpr std::uint64_t max_modexp_prime = 257;

  inline bool is_prime(std::uint64_t p) {
    if (p < 2) {
      return false;
    }
    for (std::uint64_t d = 2; d * d <= p; ++d) {
      if (p % d == 0) {
        return false;
      }
    }
    return true;
  }

  inline std::uint64_t power_mod(std::uint64_t x,
                                 std::uint64_t e,
                                 std::uint64_t p) {
    std::uint64_t result = 1 % p;
    x %= p;
    while (e > 0) {
      if (e & 1U) {
        result = result * x % p;
      }
      x = x * x % p;
      e >>= 1U;
    }
    return result;
  }

  //! S = U_{p-1} (units mod p - 1 under multiplication) acting on X = U_p
  //! by n.x = x^n mod p.  Element and point ids list the residues in
  //! increasing order; labels are the residues.
  struct ModexpSystem {
    std::uint64_t              prime;
    TotalAct                   act;
    std::vector<std::uint64_t> exponents;  // element id -> residue mod p-1
    std::vector<std::uint64_t> residues;   // point id -> residue mod p
    bool                       is_free;    // every stabilizer trivial

    std::optional<ElementId> element_of(std::uint64_t n) const {
      for (ElementId k = 0; k < exponents.size(); ++k) {
        if (exponents[k] == n) {
          return k;
        }
      }
      return std::nullopt;
    }

    std::optional<PointId> point_of(std::uint64_t x) const {
      for (PointId k = 0; k < residues.size(); ++k) {
        if (residues[k] == x) {
          return k;
        }
      }
      return std::nullopt;
    }
  };

  inline ModexpSystem modexp_system(std::uint64_t p) {
    if (!is_prime(p)) {
      throw Error(ErrorCode::NotPrime,
                  std::to_string(p) + " is not prime",
                  {static_cast<std::size_t>(p)});
    }
    if (p > max_modexp_prime) {
      throw Error(ErrorCode::PreconditionFailed,
                  "modexp systems are limited to p <= "
                      + std::to_string(max_modexp_prime),
                  {static_cast<std::size_t>(p)});
    }
    auto const order = p - 1;
    auto const gcd   = [](std::uint64_t a, std::uint64_t b) {
      while (b != 0) {
        a = std::exchange(b, a % b);
      }
      return a;
    };
    std::vector<std::uint64_t> exponents, residues;
    for (std::uint64_t n = 0; n < order; ++n) {
      if (gcd(n, order) == 1 || order == 1) {
        exponents.push_back(order == 1 ? 1 : n);
      }
    }
    for (std::uint64_t x = 1; x < p; ++x) {
      residues.push_back(x);
    }
    auto const index_of = [](std::vector<std::uint64_t> const& v,
                             std::uint64_t                     value) {
      return static_cast<std::size_t>(
          std::find(v.begin(), v.end(), value) - v.begin());
    };
    auto const  k = exponents.size();
    CayleyTable table(k, std::vector<ElementId>(k));
    std::vector<std::string> labels;
    for (ElementId a = 0; a < k; ++a) {
      for (ElementId b = 0; b < k; ++b) {
        auto const prod = order == 1 ? 1 : exponents[a] * exponents[b] % order;
        table[a][b]     = index_of(exponents, prod);
      }
      labels.push_back(std::to_string(exponents[a]));
    }
    TotalAct act{FiniteSemigroup::from_table(std::move(table), {}, labels),
                 std::vector<std::vector<PointId>>(
                     k, std::vector<PointId>(residues.size())),
                 {}};
    for (ElementId a = 0; a < k; ++a) {
      for (PointId x = 0; x < residues.size(); ++x) {
        act.table[a][x]
            = index_of(residues, power_mod(residues[x], exponents[a], p));
      }
    }
    for (auto x : residues) {
      act.point_labels.push_back(std::to_string(x));
    }
    ModexpSystem sys{p, std::move(act), std::move(exponents),
                     std::move(residues), true};
    check_total_act(sys.act);
    for (PointId x = 0; x < sys.residues.size(); ++x) {
      sys.is_free = sys.is_free && stabilizer(sys.act, x).size() == 1;
    }
    return sys;
  }

  ////////////////////////////////////////////////////////////////////////
  // Left density of stabilizers
  ////////////////////////////////////////////////////////////////////////

  struct LeftDensity {
    bool                     holds;
    std::vector<std::size_t> witness;  // (s, x) with no t: (ts)x = x
  };

  //! Every S_x is left dense: for all x, s some t has (ts)x = x.  Checked
  //! to agree with "x lies in Sx and Sx is transitive" and with "x lies in
  //! Sx and Sy = Sx for every y in Sx", where Sx = {sx | s in S}.
  inline LeftDensity stabilizers_left_dense(TotalAct const& X) {
    auto const& S = X.semigroup;
    auto const  m = X.carrier_size();
    LeftDensity result{true, {}};
    for (PointId x = 0; x < m && result.holds; ++x) {
      for (ElementId s = 0; s < S.size() && result.holds; ++s) {
        if (decrypt_key_space(X, s, x).empty()) {
          result = {false, {s, x}};
        }
      }
    }

    auto cyclic = [&](PointId x) {
      PointSet Sx(m);
      for (ElementId s = 0; s < S.size(); ++s) {
        Sx.insert(X(s, x));
      }
      return Sx;
    };
    bool transitive_form = true, cyclic_form = true;
    for (PointId x = 0; x < m; ++x) {
      auto const Sx = cyclic(x);
      if (!Sx.contains(x)) {
        transitive_form = cyclic_form = false;
        break;
      }
      for (auto y : Sx) {
        cyclic_form = cyclic_form && cyclic(y) == Sx;
        for (auto z : Sx) {
          bool hit = false;
          for (ElementId u = 0; u < S.size() && !hit; ++u) {
            hit = X(u, y) == z;
          }
          transitive_form = transitive_form && hit;
        }
      }
    }
    if (result.holds != transitive_form || result.holds != cyclic_form) {
      throw Error(ErrorCode::InternalInconsistency,
                  "left density characterisations disagree");
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Classification of locally free cryptosystems
  ////////////////////////////////////////////////////////////////////////

  struct Classification {
    ElementId              minimum_idempotent;  // f
    std::vector<ElementId> cyclic_points;       // Sf, as elements of S
    bool                   cancellative;
    bool                   locally_free;
    std::vector<PointSet>  orbits;
    std::vector<bool>      orbit_is_copy;  // orbit k isomorphic to Sf
    std::size_t            copies;
    bool                   decomposes;  // every orbit is a copy of Sf
  };

  //! Finds the minimum idempotent f (NoMinimumIdempotent if absent), builds
  //! Sf as the orbit of f under the Wagner-Preston act of S (checked
  //! isomorphic to S/(f omega-hat)), then splits X into orbits and tests each
  //! against Sf.
  inline Classification classify_locally_free_cryptosystem(TotalAct const& X) {
    auto const& S = X.semigroup;
    require_semilattice(S, "classify_locally_free_cryptosystem");
    auto const f = minimum_idempotent(S);
    if (!f) {
      throw Error(ErrorCode::NoMinimumIdempotent,
                  "the idempotents have no least element");
    }
    auto const wp    = wagner_preston(S);
    auto const Sf    = induced_subact(wp, orbit(wp, *f));
    auto const space = coset_space(S, omega_h(S, *f));
    if (!find_act_isomorphism(Sf.act, space.act())) {
      throw Error(ErrorCode::InternalInconsistency,
                  "Sf is not isomorphic to S/(f omega-hat)");
    }

    Classification result{*f, Sf.points, is_cancellative(X), false,
                          {}, {}, 0, false};
    auto const act      = as_partial_act(X);
    result.locally_free = is_locally_free(act);
    result.orbits       = orbits(act);
    // orbits of a total act need not be disjoint; only a partition counts
    PointSet covered(X.carrier_size());
    bool     disjoint = true;
    for (auto const& O : result.orbits) {
      disjoint = disjoint && !O.intersects(covered);
      covered |= O;
    }
    for (auto const& O : result.orbits) {
      bool copy = false;
      if (disjoint && O.size() == Sf.points.size()) {
        auto const sub = induced_subact(act, O);
        copy           = find_act_isomorphism(sub.act, Sf.act).has_value();
      }
      result.orbit_is_copy.push_back(copy);
      result.copies += copy ? 1 : 0;
    }
    result.decomposes = disjoint && result.copies == result.orbits.size();
    return result;
  }

}  // namespace edense

#endif  // EDENSE_CRYPTO_HPP_

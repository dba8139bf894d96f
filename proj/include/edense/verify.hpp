#ifndef EDENSE_VERIFY_HPP_
#define EDENSE_VERIFY_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "acts.hpp"
#include "closures.hpp"
#include "construction.hpp"
#include "core.hpp"
#include "cosets.hpp"
#include "crypto.hpp"
#include "element_set.hpp"
#include "error.hpp"
#include "fixtures.hpp"
#include "report.hpp"
#include "semigroup.hpp"

// Exhaustive property suites.  Each suite takes one semigroup and reports one
// finding per property; properties whose hypotheses fail are left out.

namespace edense {

  namespace detail {
    // Records the first counterexample for one property.
    class Violation {
     public:
      template <typename... Ids>
      void fail(Ids... ids) {
        if (_witness) {
          return;
        }
        std::ostringstream os;
        bool               first = true;
        ((os << (first ? "" : " ") << ids, first = false), ...);
        _witness = os.str();
      }

      bool failed() const noexcept {
        return _witness.has_value();
      }

      void report(Report& r, std::string name) const {
        r.add(std::move(name), !failed(), _witness.value_or(""));
      }

     private:
      std::optional<std::string> _witness;
    };

    // Relation matrix of a predicate on S x S.
    inline std::vector<std::vector<bool>>
    relation(FiniteSemigroup const&                           S,
             bool (*leq)(FiniteSemigroup const&, ElementId, ElementId)) {
      std::vector<std::vector<bool>> m(S.size(), std::vector<bool>(S.size()));
      for (ElementId a = 0; a < S.size(); ++a) {
        for (ElementId b = 0; b < S.size(); ++b) {
          m[a][b] = leq(S, a, b);
        }
      }
      return m;
    }

    inline ElementSet upward(std::vector<std::vector<bool>> const& leq,
                             ElementSet const&                     A) {
      ElementSet result(A.universe());
      for (ElementId s = 0; s < A.universe(); ++s) {
        for (auto a : A) {
          if (leq[a][s]) {
            result.insert(s);
            break;
          }
        }
      }
      return result;
    }

    // {ab | a in A, b in B}
    inline ElementSet set_product(FiniteSemigroup const& S,
                                  ElementSet const&      A,
                                  ElementSet const&      B) {
      ElementSet result(S.size());
      for (auto a : A) {
        for (auto b : B) {
          result.insert(S(a, b));
        }
      }
      return result;
    }

    // All subsets when n is small, otherwise those of size at most 2.
    inline std::vector<ElementSet> sample_subsets(std::size_t n) {
      std::vector<ElementSet> result;
      if (n <= 8) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
          result.push_back(ElementSet::from_mask(n, mask));
        }
        return result;
      }
      result.emplace_back(n);
      for (ElementId a = 0; a < n; ++a) {
        result.push_back(ElementSet(n, {a}));
        for (ElementId b = a + 1; b < n; ++b) {
          result.push_back(ElementSet(n, {a, b}));
        }
      }
      return result;
    }

    // Runs body, turning an escaping Error into a failed finding.
    inline void guarded(Report&                    r,
                        std::string const&         name,
                        std::function<void()> const& body) {
      try {
        body();
      } catch (Error const& e) {
        r.add(name + " (raised)", false, e.what());
      }
    }
  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // core
  ////////////////////////////////////////////////////////////////////////

  inline Report verify_core(FiniteSemigroup const& S) {
    Report     r;
    auto const n    = S.size();
    auto const E    = idempotents(S);
    auto const cls  = classify_idempotents(S);
    auto const lm   = detail::relation(S, mitsch_leq);
    auto const lh   = detail::relation(S, h_leq);
    std::vector<ElementSet> W;
    for (ElementId s = 0; s < n; ++s) {
      W.push_back(weak_inverses(S, s));
    }

    r.add("E-dense", is_e_dense(S));

    {
      detail::Violation v;
      for (ElementId s = 0; s < n; ++s) {
        auto const sets = inverse_sets(S, s);
        if (!sets.inverse.is_subset_of(sets.weak)
            || !sets.weak.is_subset_of(sets.left_pre)) {
          v.fail("s", s);
        }
        for (auto x : sets.left_pre) {
          if (!sets.weak.contains(S(x, s, x))) {
            v.fail("s", s, "s'", x);
          }
        }
      }
      v.report(r, "V(s) <= W(s) <= L(s) and s'ss' in W(s) for s' in L(s)");
    }

    {
      bool                       all_equal = true;
      std::optional<std::string> where;
      for (ElementId s = 0; s < n && all_equal; ++s) {
        for (ElementId t = 0; t < n && all_equal; ++t) {
          if (W[S(s, t)] != detail::set_product(S, W[t], W[s])) {
            all_equal = false;
            where = "s " + std::to_string(s) + " t " + std::to_string(t);
          }
        }
      }
      r.add("E band iff W(st) = W(t)W(s) for all s, t",
            cls.is_band == all_equal,
            "band=" + std::to_string(cls.is_band) + " "
                + where.value_or("all equal"));
    }

    if (cls.is_band) {
      detail::Violation v;
      for (ElementId s = 0; s < n; ++s) {
        for (auto w : W[s]) {
          for (auto e : E) {
            if (!E.contains(S(s, e, w)) || !E.contains(S(w, e, s))) {
              v.fail("s", s, "s'", w, "e", e);
            }
          }
        }
      }
      v.report(r, "band E: ses' and s'es are idempotent (weak self-conjugacy)");
    }

    {
      detail::Violation refl, anti, trans;
      for (ElementId a = 0; a < n; ++a) {
        if (!lm[a][a]) {
          refl.fail("a", a);
        }
        for (ElementId b = 0; b < n; ++b) {
          if (a != b && lm[a][b] && lm[b][a]) {
            anti.fail("a", a, "b", b);
          }
          for (ElementId c = 0; c < n; ++c) {
            if (lm[a][b] && lm[b][c] && !lm[a][c]) {
              trans.fail("a", a, "b", b, "c", c);
            }
          }
        }
      }
      refl.report(r, "Mitsch order reflexive");
      anti.report(r, "Mitsch order antisymmetric");
      trans.report(r, "Mitsch order transitive");
    }

    {
      detail::Violation sub, reg, idem;
      for (ElementId a = 0; a < n; ++a) {
        bool const regular = is_regular_element(S, a);
        for (ElementId b = 0; b < n; ++b) {
          if (lh[a][b] && !lm[a][b]) {
            sub.fail("a", a, "b", b);
          }
          if (regular && lh[a][b] != lm[a][b]) {
            reg.fail("a", a, "b", b);
          }
        }
      }
      for (ElementId b = 0; b < n; ++b) {
        for (auto e : E) {
          for (auto f : E) {
            auto const a = S(e, b);
            if (a == S(b, f) && !lm[a][b]) {
              idem.fail("b", b, "e", e, "f", f);
            }
          }
        }
      }
      sub.report(r, "h-order is contained in the Mitsch order");
      reg.report(r, "regular a: a <=_h b iff a <=_m b");
      idem.report(r, "a = eb = bf with idempotents gives a <=_m b");
    }

    {
      bool via_left = true;
      for (ElementId s = 0; s < n; ++s) {
        via_left = via_left && left_pre_inverses(S, s).size() == 1;
      }
      bool const direct    = detail::is_group_direct(S);
      bool const one_idemp = S.is_monoid() && E.size() == 1;
      r.add("group iff |L(s)| = 1 for all s iff monoid with one idempotent",
            via_left == direct && direct == one_idemp,
            "L=" + std::to_string(via_left) + " direct="
                + std::to_string(direct) + " monoid|E|=1="
                + std::to_string(one_idemp));
    }

    {
      bool const direct = detail::is_e_unitary_direct(S);
      bool const closure
          = cls.is_band && omega_h(S, E) == E;
      r.add("E-unitary iff E is a band and E omega-hat = E",
            direct == closure,
            "unitary=" + std::to_string(direct)
                + " band&closed=" + std::to_string(closure));
    }

    if (cls.is_semilattice) {
      detail::Violation p1, p2, p3, p4, p5, p6;
      for (ElementId s = 0; s < n; ++s) {
        for (auto w : W[s]) {
          for (auto e : E) {
            for (auto f : E) {
              if (!W[s].contains(S(e, w, f))) {
                p1.fail("s", s, "s'", w, "e", e, "f", f);
              }
            }
          }
          for (auto u : W[s]) {
            auto const meet = S(w, s, u);
            if (!W[s].contains(meet) || meet != S(u, s, w) || !lh[meet][w]
                || !lh[meet][u]) {
              p2.fail("s", s, "s'", w, "s*", u);
            }
            for (auto t : W[s]) {
              if (lh[t][w] && lh[t][u] && !lh[t][meet]) {
                p2.fail("s", s, "s'", w, "s*", u, "lower bound", t);
              }
            }
          }
          for (auto ww : W[w]) {
            if (ww != S(ww, w, s) || ww != S(s, w, ww)) {
              p3.fail("s", s, "s'", w, "s'*", ww);
            }
            for (auto e : E) {
              if (!lh[S(e, ww)][s]) {
                p3.fail("s", s, "s'", w, "s'*", ww, "e", e);
              }
            }
          }
          ElementSet sWs(n);
          for (auto u : W[s]) {
            sWs.insert(S(s, u, s));
          }
          bool const mutual = inverses(S, s).contains(w);
          if (!W[w].is_subset_of(sWs) || (mutual && W[w] != sWs)
              || inverses(S, w) != ElementSet(n, {S(s, w, s)})) {
            p4.fail("s", s, "s'", w);
          }
          for (auto u : W[s]) {
            if (!W[w].contains(S(S(s, w, s), S(u, s)))
                || (mutual && inverses(S, s).contains(u) && W[w] != W[u])) {
              p4.fail("s", s, "s'", w, "s*", u);
            }
          }
        }
      }
      ElementSet all_weak(n);
      for (ElementId s = 0; s < n; ++s) {
        all_weak |= W[s];
      }
      for (auto a : all_weak) {
        for (auto b : all_weak) {
          if (!all_weak.contains(S(a, b))) {
            p5.fail("not closed", a, b);
          }
        }
        if ((inverses(S, a) & all_weak).size() != 1) {
          p5.fail("inverse count", a);
        }
      }
      for (ElementId s = 0; s < n; ++s) {
        auto const www = weak_inverses(S, weak_inverses(S, W[s]));
        if (www != W[s]) {
          p6.fail("s", s);
        }
      }
      p1.report(r, "weak inverses 1: es'f in W(s)");
      p2.report(r, "weak inverses 2: s'ss* is the meet of s', s* in W(s)");
      p3.report(r,
                "weak inverses 3: s'* = s'*s's = ss's'* and es'* <=_h s");
      p4.report(r,
                "weak inverses 4: W(s') <= sW(s)s with equality for s' in "
                "V(s), V(s') = {ss's}, ss'ss*s in W(s')");
      p5.report(r, "weak inverses 5: the union of all W(s) is an inverse "
                   "subsemigroup");
      p6.report(r, "weak inverses 6: W(W(W(s))) = W(s)");
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // closures
  ////////////////////////////////////////////////////////////////////////

  inline Report verify_closures(FiniteSemigroup const& S) {
    Report     r;
    auto const n   = S.size();
    auto const E   = idempotents(S);
    auto const lm  = detail::relation(S, mitsch_leq);
    auto const lh  = detail::relation(S, h_leq);
    auto const cls = classify_idempotents(S);

    {
      detail::Violation idem, chain, mono, cover;
      for (auto const& A : detail::sample_subsets(n)) {
        auto const Am = detail::upward(lm, A);
        auto const Ah = detail::upward(lh, A);
        if (detail::upward(lm, Am) != Am || detail::upward(lh, Ah) != Ah) {
          idem.fail(A.to_string());
        }
        if (!A.is_subset_of(Ah) || !Ah.is_subset_of(Am)) {
          chain.fail(A.to_string());
        }
        for (ElementId x = 0; x < n; ++x) {
          auto B = A;
          B.insert(x);
          if (!Am.is_subset_of(detail::upward(lm, B))) {
            mono.fail(A.to_string(), x);
          }
        }
        for (auto a : Am) {
          if (!detail::upward(lm, ElementSet(n, {a})).is_subset_of(Am)) {
            cover.fail(A.to_string(), a);
          }
        }
      }
      idem.report(r, "closures are idempotent");
      chain.report(r, "A <= A omega-hat <= A omega_m");
      mono.report(r, "A <= B gives A omega_m <= B omega_m");
      cover.report(r, "A <= B omega_m gives A omega_m <= B omega_m");
    }

    if (E.size() <= 12) {
      detail::Violation v;
      auto const        members = E.members();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << members.size());
           ++mask) {
        ElementSet A(n);
        for (std::size_t i = 0; i < members.size(); ++i) {
          if ((mask >> i) & 1U) {
            A.insert(members[i]);
          }
        }
        if (detail::upward(lm, A) != detail::upward(lh, A)) {
          v.fail(A.to_string());
        }
      }
      v.report(r, "A <= E gives A omega_m = A omega-hat");
    }

    if (cls.is_band) {
      r.add("band E: E is an E-dense subsemigroup",
            is_e_dense_subsemigroup(S, E));
    }

    if (cls.is_semilattice && n <= max_subset_scan_order) {
      detail::Violation closure, three;
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        auto const H = ElementSet::from_mask(n, mask);
        if (!is_e_dense_subsemigroup(S, H)) {
          continue;
        }
        auto const Hh = detail::upward(lh, H);
        if (!is_e_dense_subsemigroup(S, Hh)) {
          closure.fail(H.to_string());
        }
        bool const h_closed = Hh == H;
        bool const m_closed = detail::upward(lm, H) == H;
        if (h_closed != is_unitary(S, H) || h_closed != m_closed) {
          three.fail(H.to_string());
        }
      }
      closure.report(r, "H omega-hat of an E-dense subsemigroup is E-dense");
      three.report(r,
                   "E-dense H: omega-hat-closed iff unitary iff "
                   "omega_m-closed");

      detail::Violation lemma;
      detail::guarded(r, "closed E-dense subsemigroups", [&] {
        auto const closed = closed_e_dense_subsemigroups(S);
        r.add("S is a closed E-dense subsemigroup of itself",
              !closed.empty() && closed.back() == ElementSet::full(n));
        for (auto const& H : closed) {
          for (ElementId x = 0; x < n; ++x) {
            for (auto xw : weak_inverses(S, x)) {
              for (auto e : E) {
                if (H.contains(S(xw, e, x)) && !H.contains(S(xw, x))) {
                  lemma.fail(H.to_string(), "x", x, "x'", xw, "e", e);
                }
                for (ElementId y = 0; y < n; ++y) {
                  if (!H.contains(S(xw, e, y))) {
                    continue;
                  }
                  for (auto yw : weak_inverses(S, y)) {
                    if (H.contains(S(yw, y)) && !H.contains(S(xw, y))) {
                      lemma.fail(H.to_string(), "x", x, "x'", xw, "e", e,
                                 "y", y, "y'", yw);
                    }
                  }
                }
              }
            }
          }
        }
        lemma.report(r,
                     "closed H: x'ex in H gives x'x in H; x'ey, y'y in H "
                     "give x'y in H");
      });
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // acts
  ////////////////////////////////////////////////////////////////////////

  struct NamedAct {
    std::string name;
    PartialAct  act;
  };

  // Acts the suites run over: Wagner-Preston on S and on its principal left
  // ideals, the Munn act, and every coset act S/H.
  inline std::vector<NamedAct> standard_acts(FiniteSemigroup const& S) {
    require_semilattice(S, "standard_acts");
    std::vector<NamedAct> acts;
    acts.push_back({"Wagner-Preston on S", wagner_preston(S)});
    std::vector<ElementSet> seen;
    for (ElementId a = 0; a < S.size(); ++a) {
      auto I = left_principal_ideal(S, a);
      if (I == ElementSet::full(S.size()) || !is_left_ideal(S, I)) {
        continue;
      }
      bool dup = false;
      for (auto const& J : seen) {
        dup = dup || J == I;
      }
      if (dup) {
        continue;
      }
      seen.push_back(I);
      acts.push_back({"Wagner-Preston on left ideal " + I.to_string(),
                      wagner_preston(left_ideal_act(S, I))});
    }
    acts.push_back({"Munn act on E", munn_act(S).act});
    for (auto const& H : closed_e_dense_subsemigroups(S)) {
      acts.push_back({"S/" + H.to_string(), coset_space(S, H).act()});
    }
    return acts;
  }

  //! Properties of a single E-dense act over a semilattice-E semigroup.
  inline Report verify_act(PartialAct const& X, std::string const& name) {
    Report      r;
    auto const& S = X.semigroup();
    auto const  n = S.size();
    auto const  m = X.carrier_size();
    auto const  E = idempotents(S);
    auto const  tag = [&](std::string const& what) {
      return name + ": " + what;
    };

    {
      detail::Violation p1, p2, p3, p4;
      for (PointId x = 0; x < m; ++x) {
        if (!(E & X.point_domain(x)).is_subset_of(stabilizer(X, x))) {
          p1.fail("x", x);
        }
      }
      for (ElementId s = 0; s < n; ++s) {
        auto const W = weak_inverses(S, s);
        for (auto w : W) {
          for (PointId x = 0; x < m; ++x) {
            if (X.defined(w, x) != X.defined(S(s, w), x)) {
              p2.fail("s", s, "s'", w, "x", x);
            }
          }
        }
        for (PointId x = 0; x < m; ++x) {
          if (!X.defined(s, x)) {
            continue;
          }
          for (PointId y = 0; y < m; ++y) {
            bool witness = false;
            for (auto w : W) {
              witness = witness || (X.defined(w, y) && X.act(w, y) == x);
            }
            if ((X.act(s, x) == y) != witness) {
              p3.fail("s", s, "x", x, "y", y);
            }
          }
          for (ElementId t = 0; t < n; ++t) {
            if (!X.defined(t, x)) {
              continue;
            }
            bool witness = false;
            for (auto w : W) {
              if (X.act(S(w, t), x) == x) {
                witness = true;
                if (X.act(s, x) == X.act(t, x) && !X.defined(w, *X.act(s, x))) {
                  p4.fail("s", s, "t", t, "x", x, "s' outside D^sx", w);
                }
              }
            }
            if ((X.act(s, x) == X.act(t, x)) != witness) {
              p4.fail("s", s, "t", t, "x", x);
            }
          }
        }
      }
      p1.report(r, tag("basic 1: E n D^x <= S_x"));
      p2.report(r, tag("basic 2: x in D_s' iff x in D_ss'"));
      p3.report(r, tag("basic 3: sx = y iff x = s'y for some s' in W(s) n D^y"));
      p4.report(r, tag("basic 4: sx = tx iff s't in S_x for some s' in W(s)"));
    }

    {
      detail::Violation part, sub;
      PointSet          covered(m);
      auto const        all = orbits(X);
      for (std::size_t i = 0; i < all.size(); ++i) {
        if (all[i].intersects(covered)) {
          part.fail("orbit", i);
        }
        covered |= all[i];
      }
      if (covered.size() != m) {
        part.fail("uncovered");
      }
      for (PointId x = 0; x < m; ++x) {
        if (X.point_domain(x).empty()) {
          if (orbit(X, x) != PointSet(m, {x})) {
            sub.fail("non-effective", x);
          }
          continue;
        }
        auto const O    = orbit(X, x);
        auto const Sx   = induced_subact(X, O);
        auto const prop = act_properties(Sx.act);
        for (auto y : O) {
          if (orbit(X, y) != O) {
            part.fail("x", x, "y", y);
          }
        }
        if (!prop.transitive || !prop.effective) {
          sub.fail("x", x);
        }
      }
      part.report(r, tag("orbits partition X"));
      sub.report(r, tag("effective x: Sx is a transitive effective subact"));
    }

    bool const lf = is_locally_free(X);
    {
      bool alt = true;
      for (PointId x = 0; x < m && alt; ++x) {
        auto const Sx = stabilizer(X, x);
        for (ElementId s = 0; s < n && alt; ++s) {
          for (ElementId t = 0; t < n && alt; ++t) {
            if (!X.defined(s, x) || !X.defined(t, x)
                || X.act(s, x) != X.act(t, x)) {
              continue;
            }
            bool found = false;
            for (auto e : Sx) {
              found = found || S(s, e) == S(t, e);
            }
            alt = found;
          }
        }
      }
      r.add(tag("locally free iff sx = tx gives se = te for some e in S_x"),
            lf == alt,
            "locally free=" + std::to_string(lf) + " other=" +
                std::to_string(alt));
    }

    auto const outcome = grading(X);
    bool const effective = act_properties(X).effective;
    r.add(tag("graded iff effective (E finite)"),
          outcome.grading.has_value() == effective,
          outcome.reason);
    if (outcome.grading) {
      auto const& p = *outcome.grading;
      detail::Violation unique, fixed, swap, conj, dom, img, smap, lfp;
      for (PointId x = 0; x < m; ++x) {
        ElementSet candidates(n);
        for (auto e : E) {
          bool ok = true;
          for (auto f : E) {
            ok = ok && X.defined(f, x) == h_leq(S, e, f);
          }
          if (ok) {
            candidates.insert(e);
          }
        }
        if (candidates != ElementSet(n, {p[x]})) {
          unique.fail("x", x);
        }
        if (!S.is_idempotent(p[x]) || X.act(p[x], x) != x) {
          fixed.fail("x", x);
        }
        if (stabilizer(X, x) != omega_h(S, p[x])) {
          lfp.fail("x", x);
        }
      }
      for (ElementId s = 0; s < n; ++s) {
        auto const W = weak_inverses(S, s);
        for (PointId x = 0; x < m; ++x) {
          for (auto w : W) {
            if (S(w, s) == p[x]) {
              auto const sx = X.act(s, x);
              if (!sx || S(s, w) != p[*sx]) {
                swap.fail("s", s, "s'", w, "x", x);
              }
            }
          }
          if (auto sx = X.act(s, x)) {
            for (auto w : W) {
              if (X.defined(w, *sx) && p[*sx] != S(s, p[x], w)) {
                conj.fail("s", s, "s'", w, "x", x);
              }
            }
          }
        }
        PointSet via_d(m), via_img(m), image(m);
        for (auto w : W) {
          for (PointId x = 0; x < m; ++x) {
            if (h_leq(S, p[x], S(w, s))) {
              via_d.insert(x);
            }
            if (h_leq(S, p[x], S(s, w))) {
              via_img.insert(x);
            }
          }
        }
        for (PointId x = 0; x < m; ++x) {
          if (auto sx = X.act(s, x)) {
            image.insert(*sx);
          }
        }
        if (via_d != X.domain(s)) {
          dom.fail("s", s);
        }
        if (via_img != image) {
          img.fail("s", s);
        }
      }
      auto const munn = munn_act(S);
      std::vector<PointId> to_munn(m);
      for (PointId x = 0; x < m; ++x) {
        for (PointId k = 0; k < munn.points.size(); ++k) {
          if (munn.points[k] == p[x]) {
            to_munn[x] = k;
          }
        }
      }
      if (!is_s_map(X, munn.act, to_munn)) {
        smap.fail("p is not an S-map to E");
      }
      unique.report(r, tag("grading is unique"));
      fixed.report(r, tag("p(x) is an idempotent fixing x"));
      swap.report(r, tag("s's = p(x) gives ss' = p(sx)"));
      conj.report(r, tag("p(sx) = sp(x)s' for s' in W(s) n D^sx"));
      dom.report(r, tag("D_s is the union of p^-1([s's])"));
      img.report(r, tag("sX is the union of p^-1([ss'])"));
      smap.report(r, tag("p is an S-map onto the Munn act"));
      r.add(tag("locally free iff S_x = p(x) omega-hat for all x"),
            lf != lfp.failed(),
            "locally free=" + std::to_string(lf));

      if (m <= default_isomorphism_bound) {
        auto const wp      = wagner_preston(S);
        bool const lhs     = lf && act_properties(X).transitive;
        bool       iso_any = false;
        for (auto e : E) {
          auto const Se = induced_subact(wp, orbit(wp, e));
          if (Se.points.size() == m
              && find_act_isomorphism(X, Se.act).has_value()) {
            iso_any = true;
          }
        }
        r.add(tag("locally free transitive graded iff isomorphic to some Se"),
              lhs == iso_any,
              "lhs=" + std::to_string(lhs) + " iso=" + std::to_string(iso_any));

        // X is a quotient of the locally free act formed by the orbits S p(x)
        detail::Violation quot;
        for (PointId x = 0; x < m; ++x) {
          auto const O = orbit(wp, p[x]);
          std::vector<std::optional<PointId>> f(n);
          f[p[x]] = x;
          for (ElementId s = 0; s < n; ++s) {
            auto const sp = wp.act(s, p[x]);
            if (sp.has_value() != X.defined(s, x)) {
              quot.fail("definedness", "s", s, "x", x);
              continue;
            }
            if (!sp) {
              continue;
            }
            if (f[*sp] && f[*sp] != X.act(s, x)) {
              quot.fail("not well defined", "s", s, "x", x);
            }
            f[*sp] = X.act(s, x);
          }
          PointSet hit(m);
          for (auto y : O) {
            if (!f[y]) {
              quot.fail("unmapped", y);
              continue;
            }
            hit.insert(*f[y]);
            for (ElementId s = 0; s < n; ++s) {
              auto const sy = wp.act(s, y);
              if (sy.has_value() != X.defined(s, *f[y])
                  || (sy && f[*sy] != X.act(s, *f[y]))) {
                quot.fail("not an S-map", "s", s, "y", y);
              }
            }
          }
          if (hit != orbit(X, x)) {
            quot.fail("not onto Sx", x);
          }
        }
        quot.report(r, tag("sp(x) -> sx maps the orbits S p(x) onto X"));
      }
    }
    return r;
  }

  inline Report verify_acts(FiniteSemigroup const& S) {
    Report r;
    if (!has_semilattice_of_idempotents(S)) {
      return r;
    }
    auto const n  = S.size();
    auto const E  = idempotents(S);
    detail::guarded(r, "acts", [&] {
      auto const wp = wagner_preston(S);
      detail::Violation se, le, sw, lw, reg;
      for (auto e : E) {
        if (stabilizer(wp, e) != omega_h(S, e)) {
          se.fail("e", e);
        }
        if (orbit(wp, e) != green_l_class(S, e)) {
          le.fail("e", e);
        }
      }
      for (ElementId s = 0; s < n; ++s) {
        bool some = false;
        for (auto w : weak_inverses(S, s)) {
          if (stabilizer(wp, w) != omega_h(S, S(w, s))) {
            sw.fail("s", s, "s'", w);
          }
          if (orbit(wp, w) != green_l_class(S, w)) {
            lw.fail("s", s, "s'", w);
          }
          some = some
                 || stabilizer(wp, s)
                        == omega_m(S, ElementSet(n, {S(s, w)}));
        }
        if (some != is_regular_element(S, s)) {
          reg.fail("s", s);
        }
      }
      se.report(r, "Wagner-Preston: S_e = e omega-hat");
      le.report(r, "Wagner-Preston: Se = L_e");
      sw.report(r, "Wagner-Preston: S_s' = (s's) omega-hat");
      lw.report(r, "Wagner-Preston: Ss' = L_s'");
      reg.report(r, "Wagner-Preston: S_s = (ss') omega for some s' iff s "
                    "regular");

      for (ElementId e = 0; e < n; ++e) {
        if (S.is_idempotent(e)) {
          auto const ideal = order_ideal(S, e);
          r.add("[" + std::to_string(e) + "] = eE = W(e)",
                ideal == weak_inverses(S, e));
        }
      }

      auto const munn = munn_act(S);
      auto const g    = grading(munn.act);
      bool       identity_grading = g.grading.has_value();
      for (PointId k = 0; identity_grading && k < munn.points.size(); ++k) {
        identity_grading = (*g.grading)[k] == munn.points[k];
      }
      r.add("Munn act is graded by the identity on E", identity_grading);

      for (auto const& [name, act] : standard_acts(S)) {
        r.append(verify_act(act, name));
      }
      if (classify_idempotents(S).is_band) {
        for (ElementId a = 0; a < n; ++a) {
          auto const I = left_principal_ideal(S, a);
          if (is_left_ideal(S, I)) {
            r.add("left ideal " + I.to_string() + " is locally free",
                  is_locally_free(wagner_preston(left_ideal_act(S, I))));
          }
        }
      }
    });
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // cosets
  ////////////////////////////////////////////////////////////////////////

  inline Report verify_cosets_for(FiniteSemigroup const& S, ElementSet const& H) {
    Report     r;
    auto const n     = S.size();
    auto const E     = idempotents(S);
    auto const label = "H=" + H.to_string() + ": ";
    detail::guarded(r, label + "coset space", [&] {
      CosetSpace const space(S, H);
      auto const&      D  = space.domain();
      auto const       pi = [&](ElementId s, ElementId t) {
        return detail::pi_h_unchecked(S, H, s, t);
      };
      detail::Violation sym, trans, cong, canc, classes, four, closed, part4;
      for (auto s : D) {
        for (auto t : D) {
          if (pi(s, t) != pi(t, s)) {
            sym.fail("s", s, "t", t);
          }
          for (auto u : D) {
            if (pi(s, t) && pi(t, u) && !pi(s, u)) {
              trans.fail("s", s, "t", t, "u", u);
            }
          }
          for (ElementId x = 0; x < n; ++x) {
            if (pi(s, t) && D.contains(S(x, s)) && D.contains(S(x, t))
                && !pi(S(x, s), S(x, t))) {
              cong.fail("s", s, "t", t, "r", x);
            }
          }
          auto const as = space.cosets()[*space.point_of(s)].members;
          auto const bs = space.cosets()[*space.point_of(t)].members;
          bool const c1 = as == bs;
          bool const c2 = pi(t, s);
          bool const c3 = bs.contains(s);
          bool const c4 = as.contains(t);
          if (c1 != c2 || c2 != c3 || c3 != c4) {
            four.fail("a", s, "b", t);
          }
        }
        ElementSet cls(n);
        for (ElementId t = 0; t < n; ++t) {
          if (pi(s, t)) {
            cls.insert(t);
          }
        }
        if (cls != space.cosets()[*space.point_of(s)].members) {
          classes.fail("s", s);
        }
      }
      for (ElementId x = 0; x < n; ++x) {
        for (ElementId a = 0; a < n; ++a) {
          for (ElementId b = 0; b < n; ++b) {
            if (pi(S(x, a), S(x, b)) && !pi(a, b)) {
              canc.fail("x", x, "a", a, "b", b);
            }
          }
        }
      }
      for (auto const& c : space.cosets()) {
        if (!is_closed(S, c.members)) {
          closed.fail(c.members.to_string());
        }
      }
      for (ElementId s = 0; s < n; ++s) {
        for (ElementId t = 0; t < n; ++t) {
          bool const lhs = D.contains(S(s, t));
          bool       rhs = false;
          if (D.contains(t)) {
            auto const Xt = space.cosets()[*space.point_of(t)].members;
            auto const k  = space.index_of(detail::translate_closure(S, s, Xt));
            rhs           = k.has_value();
            if (lhs && rhs && k != space.point_of(S(s, t))) {
              part4.fail("s", s, "t", t, "values differ");
            }
          }
          if (lhs != rhs) {
            part4.fail("s", s, "t", t);
          }
        }
      }
      sym.report(r, label + "pi_H symmetric");
      trans.report(r, label + "pi_H transitive");
      cong.report(r, label + "pi_H left partial congruence");
      canc.report(r, label + "pi_H left cancellative");
      classes.report(r, label + "pi_H classes are the cosets (sH) omega-hat");
      four.report(r, label + "coset equality four-way equivalence");
      closed.report(r, label + "each coset is omega-hat-closed");
      part4.report(r,
                   label + "((st)H) omega-hat coset iff (tH) omega-hat and "
                           "(s((tH) omega-hat)) omega-hat are, and equal");

      std::size_t meets = 0;
      for (auto const& c : space.cosets()) {
        meets += c.members.intersects(E) ? 1 : 0;
      }
      r.add(label + "exactly one coset meets E", meets == 1);
      auto const prop = act_properties(space.act());
      r.add(label + "S/H is transitive and effective",
            prop.transitive && prop.effective);
      r.add(label + "stabilizer of H in S/H is H",
            stabilizer(space.act(), space.base_point()) == H);

      detail::Violation dense;
      for (ElementId s = 0; s < n; ++s) {
        for (auto w : weak_inverses(S, s)) {
          if (H.contains(S(s, w))
              && !is_e_dense_subsemigroup(
                  S, detail::conjugate_set(S, w, H, s))) {
            dense.fail("s", s, "s'", w);
          }
        }
      }
      dense.report(r, label + "ss' in H gives s'Hs E-dense");

      if (is_self_conjugate(S, H)) {
        r.add(label + "self-conjugate: D_H is a closed E-dense subsemigroup",
              closed_e_dense_failure(S, D).empty(),
              closed_e_dense_failure(S, D));
        auto const Q = quotient_group(S, H);
        r.add(label + "quotient is a group of order |S/H|",
              is_group(Q) && Q.size() == space.size());
        rho_representation(S, H);
        r.add(label + "rho is a homomorphism with kernel pi_H", true);
      }
    });
    return r;
  }

  inline Report verify_cosets(FiniteSemigroup const& S) {
    Report r;
    if (!has_semilattice_of_idempotents(S)
        || S.size() > max_subset_scan_order) {
      return r;
    }
    auto const n = S.size();
    detail::guarded(r, "cosets", [&] {
      auto const closed = closed_e_dense_subsemigroups(S);
      for (auto const& H : closed) {
        r.append(verify_cosets_for(S, H));
      }
      // conjugacy is checked against act isomorphism inside are_conjugate
      for (auto const& H : closed) {
        for (auto const& K : closed) {
          are_conjugate(S, H, K);
        }
      }
      r.add("conjugacy witnesses agree with S/H ~ S/K", true);

      detail::Violation stab, os, conv, conj, sxs;
      for (auto const& [name, X] : standard_acts(S)) {
        std::vector<ElementSet> stabs;
        for (PointId x = 0; x < X.carrier_size(); ++x) {
          auto const Sx = stabilizer(X, x);
          stabs.push_back(Sx);
          if (!Sx.empty() && !closed_e_dense_failure(S, Sx).empty()) {
            stab.fail(name, "x", x);
            continue;
          }
          if (Sx.empty()) {
            continue;
          }
          auto const O  = induced_subact(X, orbit(X, x));
          auto const SH = coset_space(S, Sx);
          if (O.points.size() <= default_isomorphism_bound
              && !find_act_isomorphism(O.act, SH.act())) {
            os.fail(name, "x", x);
          }
          for (ElementId s = 0; s < n; ++s) {
            auto const sx = X.act(s, x);
            if (!sx) {
              continue;
            }
            auto const Ssx = stabilizer(X, *sx);
            if (!are_conjugate(S, Sx, Ssx)) {
              conj.fail(name, "s", s, "x", x);
            }
            for (auto w : weak_inverses(S, s)) {
              if (!X.defined(w, *sx)) {
                continue;
              }
              auto const sSw = detail::conjugate_set(S, s, Sx, w);
              if (!is_e_dense_subsemigroup(S, sSw) || omega_h(S, sSw) != Ssx) {
                sxs.fail(name, "s", s, "s'", w, "x", x);
              }
            }
          }
        }
        auto const prop = act_properties(X);
        if (prop.transitive && prop.effective
            && X.carrier_size() <= default_isomorphism_bound) {
          for (auto const& K : closed) {
            auto const SK = coset_space(S, K);
            if (find_act_isomorphism(SK.act(), X)) {
              bool found = false;
              for (auto const& T : stabs) {
                found = found || T == K;
              }
              if (!found) {
                conv.fail(name, K.to_string());
              }
            }
          }
        }
      }
      stab.report(r, "S_x is empty or a closed E-dense subsemigroup");
      os.report(r, "orbit-stabilizer: Sx ~ S/S_x");
      conv.report(r, "S/K ~ X gives K = S_x for some x");
      conj.report(r, "S_x and S_sx are conjugate");
      sxs.report(r, "sS_xs' is E-dense with closure S_sx");
    });
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // construction
  ////////////////////////////////////////////////////////////////////////

  //! For a group G: derived category, adjoined-band categories k = 2..4 and
  //! the G u eG isomorphism.  Non-groups produce no findings.
  inline Report verify_construction(FiniteSemigroup const& G) {
    Report r;
    if (!is_group(G)) {
      return r;
    }
    detail::guarded(r, "construction", [&] {
      auto const one = *G.identity();
      auto const [C, A] = derived_category(G);
      auto const props  = validate_group_action(C, A);
      r.add("derived category: strongly connected, locally idempotent, "
            "groupoid",
            C.is_strongly_connected() && C.is_locally_idempotent()
                && C.is_groupoid());
      r.add("derived category: action transitive and free",
            props.transitive && props.free);
      r.add("derived category: |G| objects and |G|^2 morphisms",
            C.object_count() == G.size()
                && C.morphism_count() == G.size() * G.size());
      for (ObjectId u = 0; u < C.object_count(); ++u) {
        auto const Cu = c_u_monoid(C, A, u);
        r.add("C_" + std::to_string(u) + " of the derived category ~ G",
              find_semigroup_isomorphism(Cu.monoid, G).has_value());
      }
      for (std::size_t k = 2; k <= 4; ++k) {
        auto const [B, BA] = adjoin_band_category(G, k);
        auto const Cu      = c_u_monoid(B, BA, one);
        auto const& M      = Cu.monoid;
        r.add("band size " + std::to_string(k)
                  + ": C_1 is an E-unitary dense monoid with k idempotents "
                    "and k|G| elements",
              M.is_monoid() && is_e_unitary(M) && is_e_dense(M)
                  && idempotents(M).size() == k
                  && M.size() == k * G.size());
      }
      auto const S = adjoined_band_semigroup(G);
      r.add("G u eG ~ C_1 under the standard map", S.size() == 2 * G.size());
    });
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // crypto
  ////////////////////////////////////////////////////////////////////////

  // S acting on each distinct principal left ideal S^1 a.
  inline std::vector<std::pair<std::string, TotalAct>>
  left_ideal_acts(FiniteSemigroup const& S) {
    std::vector<std::pair<std::string, TotalAct>> result;
    std::vector<ElementSet>                        seen;
    for (ElementId a = 0; a < S.size(); ++a) {
      auto const I = left_principal_ideal(S, a);
      if (!is_left_ideal(S, I)) {
        continue;
      }
      bool dup = false;
      for (auto const& J : seen) {
        dup = dup || J == I;
      }
      if (!dup) {
        seen.push_back(I);
        result.emplace_back("left ideal " + I.to_string(),
                            left_ideal_act(S, I));
      }
    }
    return result;
  }

  //! Properties of one total act; key-space and protocol checks only run
  //! when it is cancellative.
  inline Report verify_total_act(TotalAct const& X, std::string const& name) {
    Report      r;
    auto const& S    = X.semigroup;
    auto const  n    = S.size();
    auto const  m    = X.carrier_size();
    auto const  E    = idempotents(S);
    auto const  Eh   = omega_h(S, E);
    auto const  tag  = [&](std::string const& what) {
      return name + ": " + what;
    };
    bool const canc = is_cancellative(X);

    {
      bool e_in = true, eh_in = true, lpre = true;
      for (PointId x = 0; x < m; ++x) {
        auto const Sx = stabilizer(X, x);
        e_in          = e_in && E.is_subset_of(Sx);
        eh_in         = eh_in && Eh.is_subset_of(Sx);
        for (ElementId s = 0; s < n; ++s) {
          for (auto w : left_pre_inverses(S, s)) {
            lpre = lpre && Sx.contains(S(w, s));
          }
        }
      }
      r.add(tag("cancellative iff E <= S_x iff E omega-hat <= S_x iff "
                "s's in S_x for s' in L(s)"),
            canc == e_in && e_in == eh_in && eh_in == lpre,
            "cancellative=" + std::to_string(canc));
      r.add(tag("cancellative iff E-dense with D_s = X"),
            canc == is_e_dense_total_act(X));
    }
    if (!canc) {
      return r;
    }

    detail::Violation same, closed, theorem;
    for (ElementId s = 0; s < n; ++s) {
      auto const L = left_pre_inverses(S, s);
      for (auto a : L) {
        for (auto b : L) {
          for (PointId x = 0; x < m; ++x) {
            if (X(a, x) != X(b, x)) {
              same.fail("s", s, "s'", a, "s''", b, "x", x);
            }
          }
        }
      }
      for (PointId x = 0; x < m; ++x) {
        for (auto const& f : verify_key_space_theorem(X, s, x).findings) {
          if (!f.pass) {
            theorem.fail(f.name, f.witness);
          }
        }
      }
    }
    for (PointId x = 0; x < m; ++x) {
      if (!is_closed(S, stabilizer(X, x))) {
        closed.fail("x", x);
      }
    }
    same.report(r, tag("s', s'' in L(s) act identically"));
    closed.report(r, tag("S_x is omega-hat-closed"));
    theorem.report(r, tag("key space theorem, all applicable parts"));

    auto const dense = stabilizers_left_dense(X);
    r.add(tag("stabilizers are left dense"), dense.holds);

    if (is_commutative(S)) {
      detail::Violation mo, eg;
      auto const        keys = usable_keys(X);
      for (PointId x = 0; x < m; ++x) {
        for (auto s : keys) {
          for (auto t : keys) {
            if (!massey_omura(X, x, s, t).success()) {
              mo.fail("x", x, "s", s, "t", t);
            }
          }
        }
        for (ElementId s = 0; s < n; ++s) {
          for (ElementId c = 0; c < n; ++c) {
            for (ElementId d = 0; d < n; ++d) {
              if (keys.contains(S(S(c, s), d))
                  && !elgamal(X, x, s, c, d).success()) {
                eg.fail("x", x, "s", s, "c", c, "d", d);
              }
            }
          }
        }
      }
      mo.report(r, tag("Massey-Omura recovers every plaintext"));
      eg.report(r, tag("ElGamal recovers every plaintext"));
    }
    return r;
  }

  inline Report verify_crypto(FiniteSemigroup const& S) {
    Report r;
    detail::guarded(r, "crypto", [&] {
      for (auto const& [name, X] : left_ideal_acts(S)) {
        r.append(verify_total_act(X, name));
      }
    });
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Dispatch
  ////////////////////////////////////////////////////////////////////////

  inline std::vector<std::string> const& suite_names() {
    static std::vector<std::string> const names{
        "core", "closures", "acts", "cosets", "construction", "crypto"};
    return names;
  }

  //! Runs one suite by name, or every suite for "all".  Throws
  //! PreconditionFailed for an unknown name.
  inline Report verify_suite(std::string const& suite, FiniteSemigroup const& S) {
    if (suite == "all") {
      Report r;
      for (auto const& name : suite_names()) {
        r.append(verify_suite(name, S));
      }
      return r;
    }
    if (suite == "core") {
      return verify_core(S);
    }
    if (suite == "closures") {
      return verify_closures(S);
    }
    if (suite == "acts") {
      return verify_acts(S);
    }
    if (suite == "cosets") {
      return verify_cosets(S);
    }
    if (suite == "construction") {
      return verify_construction(S);
    }
    if (suite == "crypto") {
      return verify_crypto(S);
    }
    throw Error(ErrorCode::PreconditionFailed, "unknown suite '" + suite + "'");
  }

}  // namespace edense

#endif  // EDENSE_VERIFY_HPP_

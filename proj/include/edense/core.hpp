#ifndef EDENSE_CORE_HPP_
#define EDENSE_CORE_HPP_

#include <cstddef>
#include <optional>
#include <string>

#include "element_set.hpp"
#include "error.hpp"
#include "semigroup.hpp"

// Element-level invariants of a finite semigroup.  Everything here is an
// exhaustive scan of the Cayley table.

namespace edense {

  inline ElementSet idempotents(FiniteSemigroup const& S) {
    ElementSet result(S.size());
    for (ElementId e = 0; e < S.size(); ++e) {
      if (S.is_idempotent(e)) {
        result.insert(e);
      }
    }
    return result;
  }

  struct IdempotentClass {
    bool is_band;        // E is closed under multiplication
    bool is_semilattice;  // ... and commutative
  };

  inline IdempotentClass classify_idempotents(FiniteSemigroup const& S) {
    auto const E = idempotents(S);
    bool band = true, commutative = true;
    for (auto e : E) {
      for (auto f : E) {
        band        = band && S.is_idempotent(S(e, f));
        commutative = commutative && S(e, f) == S(f, e);
      }
    }
    return {band, band && commutative};
  }

  inline bool has_band_of_idempotents(FiniteSemigroup const& S) {
    return classify_idempotents(S).is_band;
  }

  inline bool has_semilattice_of_idempotents(FiniteSemigroup const& S) {
    return classify_idempotents(S).is_semilattice;
  }

  inline void require_semilattice(FiniteSemigroup const& S,
                                  char const*            where) {
    if (!has_semilattice_of_idempotents(S)) {
      throw Error(ErrorCode::NotSemilattice,
                  std::string(where)
                      + " requires the idempotents to form a semilattice");
    }
  }

  // W(s) = {s' | s's s' = s'}.
  inline ElementSet weak_inverses(FiniteSemigroup const& S, ElementId s) {
    ElementSet result(S.size());
    for (ElementId x = 0; x < S.size(); ++x) {
      if (S(S(x, s), x) == x) {
        result.insert(x);
      }
    }
    return result;
  }

  // W(A), the union of W(a) over a in A.
  inline ElementSet weak_inverses(FiniteSemigroup const& S,
                                  ElementSet const&      A) {
    ElementSet result(S.size());
    for (auto a : A) {
      result |= weak_inverses(S, a);
    }
    return result;
  }

  // L(s) = {s' | s's is idempotent}.
  inline ElementSet left_pre_inverses(FiniteSemigroup const& S, ElementId s) {
    ElementSet result(S.size());
    for (ElementId x = 0; x < S.size(); ++x) {
      if (S.is_idempotent(S(x, s))) {
        result.insert(x);
      }
    }
    return result;
  }

  // V(s) = {s' in W(s) | s in W(s')}.
  inline ElementSet inverses(FiniteSemigroup const& S, ElementId s) {
    ElementSet result(S.size());
    for (auto x : weak_inverses(S, s)) {
      if (S(S(s, x), s) == s) {
        result.insert(x);
      }
    }
    return result;
  }

  struct InverseSets {
    ElementSet weak;      // W(s)
    ElementSet inverse;   // V(s)
    ElementSet left_pre;  // L(s)
  };

  inline InverseSets inverse_sets(FiniteSemigroup const& S, ElementId s) {
    return {weak_inverses(S, s), inverses(S, s), left_pre_inverses(S, s)};
  }

  //! Mitsch's natural partial order: a <= b iff a = xb = by and
  //! xa = ay = a for some x, y in S^1.  Taking x = 1 forces a = b, so this
  //! is "a == b, or witnesses exist in S".
  inline bool mitsch_leq(FiniteSemigroup const& S, ElementId a, ElementId b) {
    if (a == b) {
      return true;
    }
    auto const n = S.size();
    for (ElementId x = 0; x < n; ++x) {
      if (S(x, b) != a || S(x, a) != a) {
        continue;
      }
      for (ElementId y = 0; y < n; ++y) {
        if (S(b, y) == a && S(a, y) == a) {
          return true;
        }
      }
    }
    return false;
  }

  //! a <=_h b iff a == b, or a = be and a = fb for idempotents e, f.
  inline bool h_leq(FiniteSemigroup const& S, ElementId a, ElementId b) {
    if (a == b) {
      return true;
    }
    bool right = false, left = false;
    for (ElementId e = 0; e < S.size() && !(right && left); ++e) {
      if (S.is_idempotent(e)) {
        right = right || S(b, e) == a;
        left  = left || S(e, b) == a;
      }
    }
    return right && left;
  }

  // S^1 a = {a} u Sa.
  inline ElementSet left_principal_ideal(FiniteSemigroup const& S,
                                         ElementId              a) {
    ElementSet result(S.size(), {a});
    for (ElementId x = 0; x < S.size(); ++x) {
      result.insert(S(x, a));
    }
    return result;
  }

  inline ElementSet green_l_class(FiniteSemigroup const& S, ElementId a) {
    auto const ideal = left_principal_ideal(S, a);
    ElementSet result(S.size());
    for (ElementId b = 0; b < S.size(); ++b) {
      if (left_principal_ideal(S, b) == ideal) {
        result.insert(b);
      }
    }
    return result;
  }

  //! Every element has a left and a right idempotent-producing partner.
  //! Always true for finite semigroups; kept as a sanity check.
  inline bool is_e_dense(FiniteSemigroup const& S) {
    auto const n = S.size();
    for (ElementId s = 0; s < n; ++s) {
      bool left = false, right = false;
      for (ElementId t = 0; t < n && !(left && right); ++t) {
        left  = left || S.is_idempotent(S(t, s));
        right = right || S.is_idempotent(S(s, t));
      }
      if (!left || !right) {
        return false;
      }
    }
    return true;
  }

  inline bool is_commutative(FiniteSemigroup const& S) {
    for (ElementId a = 0; a < S.size(); ++a) {
      for (ElementId b = a + 1; b < S.size(); ++b) {
        if (S(a, b) != S(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  inline bool is_regular_element(FiniteSemigroup const& S, ElementId x) {
    for (ElementId y = 0; y < S.size(); ++y) {
      if (S(S(x, y), x) == x) {
        return true;
      }
    }
    return false;
  }

  inline ElementSet regular_elements(FiniteSemigroup const& S) {
    ElementSet result(S.size());
    for (ElementId x = 0; x < S.size(); ++x) {
      if (is_regular_element(S, x)) {
        result.insert(x);
      }
    }
    return result;
  }

  // Every element has exactly one inverse.
  inline bool is_inverse_semigroup(FiniteSemigroup const& S) {
    for (ElementId s = 0; s < S.size(); ++s) {
      if (inverses(S, s).size() != 1) {
        return false;
      }
    }
    return true;
  }

  // The unique inverse s^{-1}; nullopt unless |V(s)| = 1.
  inline std::optional<ElementId> unique_inverse(FiniteSemigroup const& S,
                                                 ElementId              s) {
    auto V = inverses(S, s);
    if (V.size() != 1) {
      return std::nullopt;
    }
    return V.front();
  }

  namespace detail {
    // Monoid in which every element has a two-sided inverse.
    inline bool is_group_direct(FiniteSemigroup const& S) {
      auto one = S.identity();
      if (!one) {
        return false;
      }
      for (ElementId x = 0; x < S.size(); ++x) {
        bool found = false;
        for (ElementId y = 0; y < S.size() && !found; ++y) {
          found = S(x, y) == *one && S(y, x) == *one;
        }
        if (!found) {
          return false;
        }
      }
      return true;
    }

    // E is unitary: se or es in E forces s in E.
    inline bool is_e_unitary_direct(FiniteSemigroup const& S) {
      for (ElementId s = 0; s < S.size(); ++s) {
        if (S.is_idempotent(s)) {
          continue;
        }
        for (ElementId e = 0; e < S.size(); ++e) {
          if (S.is_idempotent(e)
              && (S.is_idempotent(S(s, e)) || S.is_idempotent(S(e, s)))) {
            return false;
          }
        }
      }
      return true;
    }

    // E omega-hat == E.
    inline bool idempotents_h_closed(FiniteSemigroup const& S) {
      for (ElementId s = 0; s < S.size(); ++s) {
        if (S.is_idempotent(s)) {
          continue;
        }
        for (ElementId e = 0; e < S.size(); ++e) {
          if (S.is_idempotent(e) && h_leq(S, e, s)) {
            return false;
          }
        }
      }
      return true;
    }
  }  // namespace detail

  //! S is a group iff |L(s)| = 1 for every s.  The direct definition is
  //! evaluated as well; disagreement raises InternalInconsistency.
  inline bool is_group(FiniteSemigroup const& S) {
    bool via_left = true;
    for (ElementId s = 0; s < S.size() && via_left; ++s) {
      via_left = left_pre_inverses(S, s).size() == 1;
    }
    if (via_left != detail::is_group_direct(S)) {
      throw Error(ErrorCode::InternalInconsistency,
                  "|L(s)| = 1 criterion disagrees with the group axioms");
    }
    return via_left;
  }

  //! E-unitary via the unitary-subset definition, cross-checked against
  //! "E is a band and E omega-hat = E".
  inline bool is_e_unitary(FiniteSemigroup const& S) {
    bool const direct = detail::is_e_unitary_direct(S);
    bool const via_closure
        = has_band_of_idempotents(S) && detail::idempotents_h_closed(S);
    if (direct != via_closure) {
      throw Error(ErrorCode::InternalInconsistency,
                  "unitary definition disagrees with band and E-closure "
                  "criterion");
    }
    return direct;
  }

  // S^1: adjoin a fresh identity (id n) when S has none, else return S.
  inline FiniteSemigroup adjoin_identity(FiniteSemigroup const& S) {
    if (S.is_monoid()) {
      return S;
    }
    auto const n     = S.size();
    auto       table = S.table();
    for (ElementId i = 0; i < n; ++i) {
      table[i].push_back(i);
    }
    std::vector<ElementId> last(n + 1);
    for (ElementId x = 0; x <= n; ++x) {
      last[x] = x;
    }
    table.push_back(last);
    std::vector<std::string> labels;
    if (S.has_labels()) {
      labels = S.labels();
      labels.emplace_back("1");
    }
    return FiniteSemigroup::from_table(std::move(table), n, std::move(labels));
  }

  // The least idempotent under <=_h (f = fe = ef for every idempotent e), if
  // one exists.
  inline std::optional<ElementId>
  minimum_idempotent(FiniteSemigroup const& S) {
    auto const E = idempotents(S);
    for (auto f : E) {
      bool least = true;
      for (auto e : E) {
        if (!h_leq(S, f, e)) {
          least = false;
          break;
        }
      }
      if (least) {
        return f;
      }
    }
    return std::nullopt;
  }

}  // namespace edense

#endif  // EDENSE_CORE_HPP_

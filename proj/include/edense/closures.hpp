#ifndef EDENSE_CLOSURES_HPP_
#define EDENSE_CLOSURES_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "core.hpp"
#include "element_set.hpp"
#include "error.hpp"
#include "semigroup.hpp"

namespace edense {

  // Largest order for which the 2^n subset scan is allowed.
  inline constexpr std::size_t max_subset_scan_order = 16;

  // A omega_m = {s | a <=_m s for some a in A}.
  inline ElementSet omega_m(FiniteSemigroup const& S, ElementSet const& A) {
    ElementSet result(S.size());
    for (ElementId s = 0; s < S.size(); ++s) {
      for (auto a : A) {
        if (mitsch_leq(S, a, s)) {
          result.insert(s);
          break;
        }
      }
    }
    return result;
  }

  // A omega-hat = {s | a <=_h s for some a in A}.
  inline ElementSet omega_h(FiniteSemigroup const& S, ElementSet const& A) {
    ElementSet result(S.size());
    for (ElementId s = 0; s < S.size(); ++s) {
      for (auto a : A) {
        if (h_leq(S, a, s)) {
          result.insert(s);
          break;
        }
      }
    }
    return result;
  }

  inline ElementSet omega_h(FiniteSemigroup const& S, ElementId a) {
    return omega_h(S, ElementSet(S.size(), {a}));
  }

  // sa in A forces s in A.
  inline bool is_left_unitary(FiniteSemigroup const& S, ElementSet const& A) {
    for (ElementId s = 0; s < S.size(); ++s) {
      if (A.contains(s)) {
        continue;
      }
      for (auto a : A) {
        if (A.contains(S(s, a))) {
          return false;
        }
      }
    }
    return true;
  }

  // as in A forces s in A.
  inline bool is_right_unitary(FiniteSemigroup const& S, ElementSet const& A) {
    for (ElementId s = 0; s < S.size(); ++s) {
      if (A.contains(s)) {
        continue;
      }
      for (auto a : A) {
        if (A.contains(S(a, s))) {
          return false;
        }
      }
    }
    return true;
  }

  inline bool is_unitary(FiniteSemigroup const& S, ElementSet const& A) {
    return is_left_unitary(S, A) && is_right_unitary(S, A);
  }

  inline bool is_subsemigroup(FiniteSemigroup const& S, ElementSet const& H) {
    if (H.empty()) {
      return false;
    }
    for (auto a : H) {
      for (auto b : H) {
        if (!H.contains(S(a, b))) {
          return false;
        }
      }
    }
    return true;
  }

  // Non-empty, closed under products, and W(h) meets H for every h in H.
  inline bool is_e_dense_subsemigroup(FiniteSemigroup const& S,
                                      ElementSet const&      H) {
    if (!is_subsemigroup(S, H)) {
      return false;
    }
    for (auto h : H) {
      if (!weak_inverses(S, h).intersects(H)) {
        return false;
      }
    }
    return true;
  }

  inline bool is_closed(FiniteSemigroup const& S, ElementSet const& A) {
    return omega_h(S, A) == A;
  }

  //! Names the first property that keeps H from being a closed E-dense
  //! subsemigroup, or returns an empty string.
  inline std::string closed_e_dense_failure(FiniteSemigroup const& S,
                                            ElementSet const&      H) {
    if (H.universe() != S.size()) {
      return "subset universe does not match the semigroup";
    }
    if (H.empty()) {
      return "subset is empty";
    }
    if (!is_subsemigroup(S, H)) {
      return "not closed under multiplication";
    }
    if (!is_e_dense_subsemigroup(S, H)) {
      return "some member has no weak inverse inside the subset";
    }
    if (!is_closed(S, H)) {
      return "not omega-hat-closed";
    }
    return {};
  }

  inline void require_closed_e_dense(FiniteSemigroup const& S,
                                     ElementSet const&      H) {
    require_semilattice(S, "coset machinery");
    if (auto why = closed_e_dense_failure(S, H); !why.empty()) {
      throw Error(ErrorCode::BadSubsemigroup,
                  H.to_string() + ": " + why);
    }
  }

  //! All non-empty subsets H that are E-dense subsemigroups with
  //! H omega-hat = H, by a scan of the power set (n <= 16).  For each E-dense
  //! subsemigroup, omega-hat-closed, unitary and omega_m-closed must agree;
  //! a disagreement raises InternalInconsistency.
  inline std::vector<ElementSet>
  closed_e_dense_subsemigroups(FiniteSemigroup const& S) {
    require_semilattice(S, "closed_e_dense_subsemigroups");
    auto const n = S.size();
    if (n > max_subset_scan_order) {
      throw Error(ErrorCode::SubsetTooLarge,
                  "power-set scan is limited to order "
                      + std::to_string(max_subset_scan_order),
                  {n});
    }
    std::vector<ElementSet> result;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      auto H = ElementSet::from_mask(n, mask);
      if (!is_e_dense_subsemigroup(S, H)) {
        continue;
      }
      bool const h_closed = omega_h(S, H) == H;
      bool const unitary  = is_unitary(S, H);
      bool const m_closed = omega_m(S, H) == H;
      if (h_closed != unitary || unitary != m_closed) {
        throw Error(ErrorCode::InternalInconsistency,
                    "closure characterisations disagree on " + H.to_string());
      }
      if (h_closed) {
        result.push_back(std::move(H));
      }
    }
    return result;
  }

}  // namespace edense

#endif  // EDENSE_CLOSURES_HPP_

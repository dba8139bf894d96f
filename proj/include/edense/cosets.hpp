#ifndef EDENSE_COSETS_HPP_
#define EDENSE_COSETS_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "acts.hpp"
#include "closures.hpp"
#include "core.hpp"
#include "element_set.hpp"
#include "error.hpp"
#include "semigroup.hpp"

namespace edense {

  // s pi_H t iff s't in H for some s' in W(s).
  inline bool pi_h_related(FiniteSemigroup const& S,
                           ElementSet const&      H,
                           ElementId              s,
                           ElementId              t) {
    require_closed_e_dense(S, H);
    for (auto w : weak_inverses(S, s)) {
      if (H.contains(S(w, t))) {
        return true;
      }
    }
    return false;
  }

  namespace detail {
    inline bool pi_h_unchecked(FiniteSemigroup const& S,
                               ElementSet const&      H,
                               ElementId              s,
                               ElementId              t) {
      for (auto w : weak_inverses(S, s)) {
        if (H.contains(S(w, t))) {
          return true;
        }
      }
      return false;
    }

    inline ElementSet domain_unchecked(FiniteSemigroup const& S,
                                       ElementSet const&      H) {
      ElementSet result(S.size());
      for (ElementId s = 0; s < S.size(); ++s) {
        if (pi_h_unchecked(S, H, s, s)) {
          result.insert(s);
        }
      }
      return result;
    }

    // (sA) omega-hat
    inline ElementSet translate_closure(FiniteSemigroup const& S,
                                        ElementId              s,
                                        ElementSet const&      A) {
      ElementSet sA(S.size());
      for (auto a : A) {
        sA.insert(S(s, a));
      }
      return omega_h(S, sA);
    }
  }  // namespace detail

  // D_H = {s | s's in H for some s' in W(s)}
  inline ElementSet coset_domain(FiniteSemigroup const& S,
                                 ElementSet const&      H) {
    require_closed_e_dense(S, H);
    return detail::domain_unchecked(S, H);
  }

  struct OmegaCoset {
    ElementSet base;
    ElementId  representative;
    ElementSet members;
  };

  //! (sH) omega-hat, or nullopt when s is outside D_H.
  inline std::optional<OmegaCoset> coset(FiniteSemigroup const& S,
                                         ElementSet const&      H,
                                         ElementId              s) {
    require_closed_e_dense(S, H);
    if (!detail::pi_h_unchecked(S, H, s, s)) {
      return std::nullopt;
    }
    return OmegaCoset{H, s, detail::translate_closure(S, s, H)};
  }

  //! The left omega-hat cosets of H with the action s.X = ((st)H) omega-hat
  //! for X = (tH) omega-hat, defined iff st is in D_H.  Construction checks
  //! that the action does not depend on the representative t, that it agrees
  //! with (sX) omega-hat, that exactly one coset meets E (namely H) and that
  //! the stabilizer of H is H.
  class CosetSpace {
   public:
    CosetSpace(FiniteSemigroup const& S, ElementSet H)
        : _semigroup(S), _base(std::move(H)) {
      require_closed_e_dense(S, _base);
      _domain = detail::domain_unchecked(S, _base);

      for (auto s : _domain) {
        auto members = detail::translate_closure(S, s, _base);
        auto it      = std::find_if(_cosets.begin(),
                               _cosets.end(),
                               [&](OmegaCoset const& c) {
                                 return c.members == members;
                               });
        if (it == _cosets.end()) {
          _cosets.push_back({_base, s, std::move(members)});
        }
      }
      std::sort(_cosets.begin(),
                _cosets.end(),
                [](OmegaCoset const& a, OmegaCoset const& b) {
                  return a.members < b.members;
                });
      // each element of D_H lies in exactly its own coset
      for (auto s : _domain) {
        auto const k = index_of(detail::translate_closure(S, s, _base));
        if (!k || !_cosets[*k].members.contains(s)) {
          throw Error(ErrorCode::InternalInconsistency,
                      "s does not lie in (sH) omega-hat",
                      {s});
        }
      }

      auto const E        = idempotents(S);
      std::size_t meets_e = 0;
      for (std::size_t k = 0; k < _cosets.size(); ++k) {
        if (_cosets[k].members.intersects(E)) {
          ++meets_e;
          if (_cosets[k].members != _base) {
            throw Error(ErrorCode::InternalInconsistency,
                        "the coset meeting E is not H");
          }
          _base_index = k;
        }
      }
      if (meets_e != 1) {
        throw Error(ErrorCode::InternalInconsistency,
                    "expected exactly one coset meeting E",
                    {meets_e});
      }

      PartialTable table(S.size(),
                         std::vector<std::optional<PointId>>(_cosets.size()));
      for (ElementId s = 0; s < S.size(); ++s) {
        for (PointId k = 0; k < _cosets.size(); ++k) {
          auto const& X = _cosets[k].members;
          std::optional<PointId> image;
          bool                   first = true;
          for (auto t : X) {
            std::optional<PointId> via;
            if (_domain.contains(S(s, t))) {
              via = index_of(detail::translate_closure(S, S(s, t), _base));
              if (!via) {
                throw Error(ErrorCode::InternalInconsistency,
                            "((st)H) omega-hat is not a listed coset",
                            {s, t});
              }
            }
            if (!first && via != image) {
              throw Error(ErrorCode::WellDefinednessViolation,
                          "coset action depends on the representative",
                          {s, k, t});
            }
            image = via;
            first = false;
          }
          if (image) {
            auto const sX = detail::translate_closure(S, s, X);
            if (sX != _cosets[*image].members) {
              throw Error(ErrorCode::InternalInconsistency,
                          "(sX) omega-hat differs from ((st)H) omega-hat",
                          {s, k});
            }
          }
          table[s][k] = image;
        }
      }
      std::vector<std::string> labels;
      for (auto const& c : _cosets) {
        labels.push_back(c.members.to_string());
      }
      _act = PartialAct::validate(S, std::move(table), std::move(labels));

      if (stabilizer(*_act, _base_index) != _base) {
        throw Error(ErrorCode::InternalInconsistency,
                    "stabilizer of H in S/H differs from H");
      }
    }

    FiniteSemigroup const& semigroup() const noexcept {
      return _semigroup;
    }

    ElementSet const& subsemigroup() const noexcept {
      return _base;
    }

    ElementSet const& domain() const noexcept {
      return _domain;
    }

    std::vector<OmegaCoset> const& cosets() const noexcept {
      return _cosets;
    }

    std::size_t size() const noexcept {
      return _cosets.size();
    }

    // Point of the coset equal to H.
    PointId base_point() const noexcept {
      return _base_index;
    }

    PartialAct const& act() const {
      return *_act;
    }

    std::optional<PointId> index_of(ElementSet const& members) const {
      for (PointId k = 0; k < _cosets.size(); ++k) {
        if (_cosets[k].members == members) {
          return k;
        }
      }
      return std::nullopt;
    }

    // Coset containing s, for s in D_H.
    std::optional<PointId> point_of(ElementId s) const {
      if (!_domain.contains(s)) {
        return std::nullopt;
      }
      return index_of(detail::translate_closure(_semigroup, s, _base));
    }

   private:
    FiniteSemigroup           _semigroup;
    ElementSet                _base;
    ElementSet                _domain;
    std::vector<OmegaCoset>   _cosets;
    PointId                   _base_index = 0;
    std::optional<PartialAct> _act;
  };

  inline CosetSpace coset_space(FiniteSemigroup const& S, ElementSet const& H) {
    return CosetSpace(S, H);
  }

  namespace detail {
    // s'As as a set.
    inline ElementSet conjugate_set(FiniteSemigroup const& S,
                                    ElementId              left,
                                    ElementSet const&      A,
                                    ElementId              right) {
      ElementSet result(S.size());
      for (auto a : A) {
        result.insert(S(left, a, right));
      }
      return result;
    }
  }  // namespace detail

  struct ConjugacyWitness {
    ElementId element;       // s
    ElementId weak_inverse;  // s' in W(s)
  };

  //! A pair s, s' in W(s) with s'Hs in K and sKs' in H.  On success the
  //! strengthened equalities (s'Hs) omega-hat = K, (sKs') omega-hat = H and the
  //! side conditions ss' in H, s's in K are asserted.  The answer is
  //! compared with an isomorphism search between S/H and S/K.
  inline std::optional<ConjugacyWitness>
  are_conjugate(FiniteSemigroup const& S,
                ElementSet const&      H,
                ElementSet const&      K) {
    require_closed_e_dense(S, H);
    require_closed_e_dense(S, K);
    std::optional<ConjugacyWitness> found;
    for (ElementId s = 0; s < S.size() && !found; ++s) {
      for (auto w : weak_inverses(S, s)) {
        if (detail::conjugate_set(S, w, H, s).is_subset_of(K)
            && detail::conjugate_set(S, s, K, w).is_subset_of(H)) {
          found = ConjugacyWitness{s, w};
          break;
        }
      }
    }
    if (found) {
      auto const s = found->element, w = found->weak_inverse;
      if (omega_h(S, detail::conjugate_set(S, w, H, s)) != K
          || omega_h(S, detail::conjugate_set(S, s, K, w)) != H) {
        throw Error(ErrorCode::InternalInconsistency,
                    "conjugacy witness fails the omega-hat equalities",
                    {s, w});
      }
      if (!H.contains(S(s, w)) || !K.contains(S(w, s))) {
        throw Error(ErrorCode::InternalInconsistency,
                    "conjugacy witness fails ss' in H, s's in K",
                    {s, w});
      }
    }
    CosetSpace const over_h(S, H), over_k(S, K);
    if (over_h.size() <= default_isomorphism_bound
        && over_k.size() <= default_isomorphism_bound) {
      bool const iso
          = find_act_isomorphism(over_h.act(), over_k.act()).has_value();
      if (iso != found.has_value()) {
        throw Error(ErrorCode::InternalInconsistency,
                    "conjugacy witness search disagrees with S/H ~ S/K");
      }
    }
    return found;
  }

  //! st in H forces ts in H.  Cross-checked against: s' in W(s) with s's in
  //! H forces sHs' in H.
  inline bool is_self_conjugate(FiniteSemigroup const& S, ElementSet const& H) {
    require_closed_e_dense(S, H);
    auto const n      = S.size();
    bool       direct = true;
    for (ElementId s = 0; s < n && direct; ++s) {
      for (ElementId t = 0; t < n && direct; ++t) {
        direct = !H.contains(S(s, t)) || H.contains(S(t, s));
      }
    }
    bool conjugates = true;
    for (ElementId s = 0; s < n && conjugates; ++s) {
      for (auto w : weak_inverses(S, s)) {
        if (H.contains(S(w, s))
            && !detail::conjugate_set(S, s, H, w).is_subset_of(H)) {
          conjugates = false;
          break;
        }
      }
    }
    if (direct != conjugates) {
      throw Error(ErrorCode::InternalInconsistency,
                  "self-conjugacy criteria disagree on " + H.to_string());
    }
    return direct;
  }

  inline void require_self_conjugate(FiniteSemigroup const& S,
                                     ElementSet const&      H) {
    if (!is_self_conjugate(S, H)) {
      throw Error(ErrorCode::NotSelfConjugate,
                  H.to_string() + " is not self-conjugate");
    }
  }

  //! The cosets of a self-conjugate H under
  //! ((sH) omega-hat)((tH) omega-hat) = ((st)H) omega-hat.  Element k is the
  //! k-th coset of coset_space(S, H).
  inline FiniteSemigroup quotient_group(FiniteSemigroup const& S,
                                        ElementSet const&      H) {
    require_self_conjugate(S, H);
    CosetSpace const space(S, H);
    auto const       m = space.size();
    CayleyTable      table(m, std::vector<ElementId>(m));
    for (PointId i = 0; i < m; ++i) {
      for (PointId j = 0; j < m; ++j) {
        std::optional<PointId> value;
        for (auto s : space.cosets()[i].members) {
          for (auto t : space.cosets()[j].members) {
            auto const k = space.point_of(S(s, t));
            if (!k || (value && *value != *k)) {
              throw Error(ErrorCode::WellDefinednessViolation,
                          "coset product depends on representatives",
                          {i, j, s, t});
            }
            value = k;
          }
        }
        table[i][j] = *value;
      }
    }
    std::vector<std::string> labels;
    for (auto const& c : space.cosets()) {
      labels.push_back(c.members.to_string());
    }
    auto Q = FiniteSemigroup::from_table(
        std::move(table), space.base_point(), std::move(labels));
    if (!is_group(Q)) {
      throw Error(ErrorCode::InternalInconsistency,
                  "quotient by a self-conjugate subsemigroup is not a group");
    }
    return Q;
  }

  struct RhoRepresentation {
    ElementSet domain;  // D_H
    // permutation[s][k] = point of (s X_k) omega-hat, for s in D_H
    std::vector<std::vector<PointId>> permutation;
  };

  //! rho_s(X) = (sX) omega-hat on S/H for s in D_H.  Checks each rho_s is a
  //! bijection, rho is multiplicative, and rho_s = rho_t iff s pi_H t.
  inline RhoRepresentation rho_representation(FiniteSemigroup const& S,
                                              ElementSet const&      H) {
    require_self_conjugate(S, H);
    CosetSpace const space(S, H);
    auto const       m = space.size();
    RhoRepresentation rho{space.domain(), {}};
    rho.permutation.resize(S.size());
    for (auto s : space.domain()) {
      std::vector<PointId> image(m);
      PointSet             hit(m);
      for (PointId k = 0; k < m; ++k) {
        auto const sx = space.act().act(s, k);
        if (!sx) {
          throw Error(ErrorCode::InternalInconsistency,
                      "rho_s undefined on a coset",
                      {s, k});
        }
        image[k] = *sx;
        hit.insert(*sx);
      }
      if (hit.size() != m) {
        throw Error(ErrorCode::InternalInconsistency,
                    "rho_s is not a bijection",
                    {s});
      }
      rho.permutation[s] = std::move(image);
    }
    for (auto s : space.domain()) {
      for (auto t : space.domain()) {
        auto const st = S(s, t);
        if (!space.domain().contains(st)) {
          throw Error(ErrorCode::InternalInconsistency,
                      "D_H is not closed under products",
                      {s, t});
        }
        for (PointId k = 0; k < m; ++k) {
          if (rho.permutation[st][k]
              != rho.permutation[s][rho.permutation[t][k]]) {
            throw Error(ErrorCode::InternalInconsistency,
                        "rho is not a homomorphism",
                        {s, t, k});
          }
        }
        bool const same = rho.permutation[s] == rho.permutation[t];
        if (same != detail::pi_h_unchecked(S, H, s, t)) {
          throw Error(ErrorCode::InternalInconsistency,
                      "ker(rho) differs from pi_H",
                      {s, t});
        }
      }
    }
    return rho;
  }

}  // namespace edense

#endif  // EDENSE_COSETS_HPP_

#ifndef EDENSE_CONSTRUCTION_HPP_
#define EDENSE_CONSTRUCTION_HPP_

#include <array>
#include <cstddef>
#include <functional>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"
#include "element_set.hpp"
#include "error.hpp"
#include "fixtures.hpp"
#include "semigroup.hpp"

namespace edense {

  using ObjectId   = std::size_t;
  using MorphismId = std::size_t;

  struct Morphism {
    ObjectId source;
    ObjectId target;
  };

  // compose[p][q] = p + q (first p, then q), nullopt when not composable.
  using CompositionTable = std::vector<std::vector<std::optional<MorphismId>>>;

  ////////////////////////////////////////////////////////////////////////
  // Finite categories
  ////////////////////////////////////////////////////////////////////////

  class FiniteCategory {
   public:
    //! Throws BadComposability (composition defined exactly on pairs with
    //! target(p) = source(q), landing in mor(source(p), target(q))),
    //! NotAssociative (witness p, q, r) or MissingIdentity (witness u).
    static FiniteCategory build(std::size_t              objects,
                                std::vector<Morphism>    morphisms,
                                CompositionTable         compose,
                                std::vector<std::string> labels = {}) {
      auto const m = morphisms.size();
      if (objects == 0) {
        throw Error(ErrorCode::MalformedTable, "a category needs an object");
      }
      if (compose.size() != m || (!labels.empty() && labels.size() != m)) {
        throw Error(ErrorCode::MalformedTable,
                    "composition table and labels must cover every morphism");
      }
      for (MorphismId p = 0; p < m; ++p) {
        if (morphisms[p].source >= objects || morphisms[p].target >= objects) {
          throw Error(ErrorCode::BadComposability,
                      "morphism endpoint out of range",
                      {p});
        }
        if (compose[p].size() != m) {
          throw Error(ErrorCode::MalformedTable, "ragged composition table",
                      {p});
        }
      }
      for (MorphismId p = 0; p < m; ++p) {
        for (MorphismId q = 0; q < m; ++q) {
          bool const composable = morphisms[p].target == morphisms[q].source;
          auto const r          = compose[p][q];
          if (composable != r.has_value()) {
            throw Error(ErrorCode::BadComposability,
                        composable ? "composable pair has no composite"
                                   : "composite given for a non-composable "
                                     "pair",
                        {p, q});
          }
          if (r
              && (*r >= m || morphisms[*r].source != morphisms[p].source
                  || morphisms[*r].target != morphisms[q].target)) {
            throw Error(ErrorCode::BadComposability,
                        "composite has the wrong endpoints",
                        {p, q, *r});
          }
        }
      }
      for (MorphismId p = 0; p < m; ++p) {
        for (MorphismId q = 0; q < m; ++q) {
          if (!compose[p][q]) {
            continue;
          }
          for (MorphismId r = 0; r < m; ++r) {
            if (!compose[q][r]) {
              continue;
            }
            if (compose[*compose[p][q]][r] != compose[p][*compose[q][r]]) {
              throw Error(ErrorCode::NotAssociative,
                          "(p + q) + r != p + (q + r)",
                          {p, q, r});
            }
          }
        }
      }
      std::vector<MorphismId> identities(objects);
      for (ObjectId u = 0; u < objects; ++u) {
        std::optional<MorphismId> found;
        for (MorphismId i = 0; i < m && !found; ++i) {
          if (morphisms[i].source != u || morphisms[i].target != u) {
            continue;
          }
          bool ok = true;
          for (MorphismId q = 0; q < m && ok; ++q) {
            if (morphisms[q].source == u) {
              ok = compose[i][q] == q;
            }
            if (ok && morphisms[q].target == u) {
              ok = compose[q][i] == q;
            }
          }
          if (ok) {
            found = i;
          }
        }
        if (!found) {
          throw Error(ErrorCode::MissingIdentity,
                      "object has no identity morphism",
                      {u});
        }
        identities[u] = *found;
      }
      FiniteCategory C;
      C._objects    = objects;
      C._morphisms  = std::move(morphisms);
      C._compose    = std::move(compose);
      C._labels     = std::move(labels);
      C._identities = std::move(identities);
      return C;
    }

    std::size_t object_count() const noexcept {
      return _objects;
    }

    std::size_t morphism_count() const noexcept {
      return _morphisms.size();
    }

    Morphism const& morphism(MorphismId p) const {
      return _morphisms[p];
    }

    ObjectId source(MorphismId p) const {
      return _morphisms[p].source;
    }

    ObjectId target(MorphismId p) const {
      return _morphisms[p].target;
    }

    std::optional<MorphismId> compose(MorphismId p, MorphismId q) const {
      return _compose[p][q];
    }

    CompositionTable const& composition() const noexcept {
      return _compose;
    }

    // 0_u
    MorphismId identity(ObjectId u) const {
      return _identities[u];
    }

    std::vector<MorphismId> hom(ObjectId u, ObjectId v) const {
      std::vector<MorphismId> result;
      for (MorphismId p = 0; p < _morphisms.size(); ++p) {
        if (_morphisms[p].source == u && _morphisms[p].target == v) {
          result.push_back(p);
        }
      }
      return result;
    }

    std::string label(MorphismId p) const {
      return _labels.empty() ? std::to_string(p) : _labels[p];
    }

    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }

    // Each local monoid mor(u, u) is a band.
    bool is_locally_idempotent() const {
      for (MorphismId p = 0; p < _morphisms.size(); ++p) {
        if (source(p) == target(p) && _compose[p][p] != p) {
          return false;
        }
      }
      return true;
    }

    bool is_strongly_connected() const {
      for (ObjectId u = 0; u < _objects; ++u) {
        for (ObjectId v = 0; v < _objects; ++v) {
          if (hom(u, v).empty()) {
            return false;
          }
        }
      }
      return true;
    }

    // Every morphism has a two-sided inverse.
    bool is_groupoid() const {
      for (MorphismId p = 0; p < _morphisms.size(); ++p) {
        bool found = false;
        for (auto q : hom(target(p), source(p))) {
          if (_compose[p][q] == identity(source(p))
              && _compose[q][p] == identity(target(p))) {
            found = true;
            break;
          }
        }
        if (!found) {
          return false;
        }
      }
      return true;
    }

   private:
    FiniteCategory() = default;

    std::size_t              _objects = 0;
    std::vector<Morphism>    _morphisms;
    CompositionTable         _compose;
    std::vector<std::string> _labels;
    std::vector<MorphismId>  _identities;
  };

  inline FiniteCategory build_category(std::size_t              objects,
                                       std::vector<Morphism>    morphisms,
                                       CompositionTable         compose,
                                       std::vector<std::string> labels = {}) {
    return FiniteCategory::build(
        objects, std::move(morphisms), std::move(compose), std::move(labels));
  }

  ////////////////////////////////////////////////////////////////////////
  // Group actions on categories
  ////////////////////////////////////////////////////////////////////////

  struct GroupCategoryAction {
    FiniteSemigroup                      group;
    std::vector<std::vector<ObjectId>>   on_objects;    // [g][u] = gu
    std::vector<std::vector<MorphismId>> on_morphisms;  // [g][p] = gp
  };

  struct GroupActionProperties {
    bool transitive;  // on objects
    bool free;        // gu = u forces g = 1
  };

  inline void require_group(FiniteSemigroup const& G, char const* where) {
    if (!is_group(G)) {
      throw Error(ErrorCode::NotGroup, std::string(where) + " needs a group");
    }
  }

  //! Checks that the maps form an action (1x = x, (gh)x = g(hx)) by
  //! functors: gp in mor(gu, gv), g(p + q) = gp + gq, g0_u = 0_{gu}.
  //! Throws ActionAxiomViolation with a witness.
  inline GroupActionProperties
  validate_group_action(FiniteCategory const&      C,
                        GroupCategoryAction const& A) {
    auto const& G = A.group;
    require_group(G, "validate_group_action");
    auto const n = G.size();
    if (A.on_objects.size() != n || A.on_morphisms.size() != n) {
      throw Error(ErrorCode::ActionAxiomViolation,
                  "action tables need one row per group element");
    }
    for (ElementId g = 0; g < n; ++g) {
      if (A.on_objects[g].size() != C.object_count()
          || A.on_morphisms[g].size() != C.morphism_count()) {
        throw Error(ErrorCode::ActionAxiomViolation,
                    "action row has the wrong length",
                    {g});
      }
      for (auto u : A.on_objects[g]) {
        if (u >= C.object_count()) {
          throw Error(ErrorCode::ActionAxiomViolation,
                      "object image out of range",
                      {g, u});
        }
      }
      for (auto p : A.on_morphisms[g]) {
        if (p >= C.morphism_count()) {
          throw Error(ErrorCode::ActionAxiomViolation,
                      "morphism image out of range",
                      {g, p});
        }
      }
    }
    auto const one = *G.identity();
    for (ObjectId u = 0; u < C.object_count(); ++u) {
      if (A.on_objects[one][u] != u) {
        throw Error(ErrorCode::ActionAxiomViolation,
                    "identity moves an object",
                    {u});
      }
    }
    for (MorphismId p = 0; p < C.morphism_count(); ++p) {
      if (A.on_morphisms[one][p] != p) {
        throw Error(ErrorCode::ActionAxiomViolation,
                    "identity moves a morphism",
                    {p});
      }
    }
    for (ElementId g = 0; g < n; ++g) {
      for (ElementId h = 0; h < n; ++h) {
        for (ObjectId u = 0; u < C.object_count(); ++u) {
          if (A.on_objects[G(g, h)][u]
              != A.on_objects[g][A.on_objects[h][u]]) {
            throw Error(ErrorCode::ActionAxiomViolation,
                        "(gh)u != g(hu)",
                        {g, h, u});
          }
        }
        for (MorphismId p = 0; p < C.morphism_count(); ++p) {
          if (A.on_morphisms[G(g, h)][p]
              != A.on_morphisms[g][A.on_morphisms[h][p]]) {
            throw Error(ErrorCode::ActionAxiomViolation,
                        "(gh)p != g(hp)",
                        {g, h, p});
          }
        }
      }
      for (MorphismId p = 0; p < C.morphism_count(); ++p) {
        auto const gp = A.on_morphisms[g][p];
        if (C.source(gp) != A.on_objects[g][C.source(p)]
            || C.target(gp) != A.on_objects[g][C.target(p)]) {
          throw Error(ErrorCode::ActionAxiomViolation,
                      "gp is not in mor(gu, gv)",
                      {g, p});
        }
        for (MorphismId q = 0; q < C.morphism_count(); ++q) {
          if (auto pq = C.compose(p, q)) {
            if (A.on_morphisms[g][*pq]
                != C.compose(gp, A.on_morphisms[g][q])) {
              throw Error(ErrorCode::ActionAxiomViolation,
                          "g(p + q) != gp + gq",
                          {g, p, q});
            }
          }
        }
      }
      for (ObjectId u = 0; u < C.object_count(); ++u) {
        if (A.on_morphisms[g][C.identity(u)]
            != C.identity(A.on_objects[g][u])) {
          throw Error(ErrorCode::ActionAxiomViolation,
                      "g0_u != 0_{gu}",
                      {g, u});
        }
      }
    }

    bool transitive = true;
    for (ObjectId u = 0; u < C.object_count() && transitive; ++u) {
      for (ObjectId v = 0; v < C.object_count() && transitive; ++v) {
        bool hit = false;
        for (ElementId g = 0; g < n && !hit; ++g) {
          hit = A.on_objects[g][u] == v;
        }
        transitive = hit;
      }
    }
    bool free = true;
    for (ElementId g = 0; g < n && free; ++g) {
      if (g == one) {
        continue;
      }
      for (ObjectId u = 0; u < C.object_count() && free; ++u) {
        free = A.on_objects[g][u] != u;
      }
    }
    return {transitive, free};
  }

  struct CategoryWithAction {
    FiniteCategory      category;
    GroupCategoryAction action;
  };

  ////////////////////////////////////////////////////////////////////////
  // The monoid C_u
  ////////////////////////////////////////////////////////////////////////

  struct CuMonoid {
    FiniteSemigroup                               monoid;
    std::vector<std::pair<MorphismId, ElementId>> pairs;  // element k = (p, g)

    std::optional<ElementId> element_of(MorphismId p, ElementId g) const {
      for (ElementId k = 0; k < pairs.size(); ++k) {
        if (pairs[k] == std::pair{p, g}) {
          return k;
        }
      }
      return std::nullopt;
    }
  };

  //! C_u = {(p, g) | p in mor(u, gu)} with (p, g)(q, h) = (p + gq, gh).
  //! Requires a strongly connected, locally idempotent category with a
  //! transitive free action.  The result is checked to be an E-unitary
  //! E-dense monoid with identity (0_u, 1), whose idempotents are the pairs
  //! (p, 1), and which is a group iff every mor(u, gu) is a singleton.
  inline CuMonoid c_u_monoid(FiniteCategory const&      C,
                             GroupCategoryAction const& A,
                             ObjectId                   u) {
    if (u >= C.object_count()) {
      throw Error(ErrorCode::PreconditionFailed, "base object out of range",
                  {u});
    }
    auto const props = validate_group_action(C, A);
    if (!C.is_strongly_connected()) {
      throw Error(ErrorCode::PreconditionFailed,
                  "category is not strongly connected");
    }
    if (!C.is_locally_idempotent()) {
      throw Error(ErrorCode::PreconditionFailed,
                  "category is not locally idempotent");
    }
    if (!props.transitive) {
      throw Error(ErrorCode::PreconditionFailed,
                  "group action is not transitive");
    }
    if (!props.free) {
      throw Error(ErrorCode::PreconditionFailed, "group action is not free");
    }
    auto const& G   = A.group;
    auto const  one = *G.identity();

    CuMonoid result{G, {}};  // monoid replaced below
    bool     singletons = true;
    for (ElementId g = 0; g < G.size(); ++g) {
      auto const hom = C.hom(u, A.on_objects[g][u]);
      singletons     = singletons && hom.size() == 1;
      for (auto p : hom) {
        result.pairs.emplace_back(p, g);
      }
    }
    auto const  n = result.pairs.size();
    CayleyTable table(n, std::vector<ElementId>(n));
    for (ElementId a = 0; a < n; ++a) {
      auto const [p, g] = result.pairs[a];
      for (ElementId b = 0; b < n; ++b) {
        auto const [q, h] = result.pairs[b];
        auto const pq     = C.compose(p, A.on_morphisms[g][q]);
        auto const k = pq ? result.element_of(*pq, G(g, h)) : std::nullopt;
        if (!k) {
          throw Error(ErrorCode::InternalInconsistency,
                      "(p + gq, gh) is not an element of C_u",
                      {a, b});
        }
        table[a][b] = *k;
      }
    }
    std::vector<std::string> labels;
    for (auto const& [p, g] : result.pairs) {
      labels.push_back("(" + C.label(p) + "," + G.label(g) + ")");
    }
    auto const unit = *result.element_of(C.identity(u), one);
    result.monoid
        = FiniteSemigroup::from_table(std::move(table), unit, std::move(labels));

    auto const& M = result.monoid;
    if (!is_e_dense(M) || !is_e_unitary(M)) {
      throw Error(ErrorCode::InternalInconsistency,
                  "C_u is not E-unitary E-dense");
    }
    ElementSet pairs_over_one(n);
    for (ElementId k = 0; k < n; ++k) {
      if (result.pairs[k].second == one) {
        pairs_over_one.insert(k);
      }
    }
    if (idempotents(M) != pairs_over_one) {
      throw Error(ErrorCode::InternalInconsistency,
                  "idempotents of C_u are not the pairs (p, 1)");
    }
    if (is_group(M) != singletons) {
      throw Error(ErrorCode::InternalInconsistency,
                  "C_u group test disagrees with |mor(u, gu)| = 1");
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Derived category and the adjoined-band family
  ////////////////////////////////////////////////////////////////////////

  // Largest local band supported by adjoin_band_category.
  inline constexpr std::size_t max_band_size = 8;

  namespace detail {
    inline ElementId group_inverse(FiniteSemigroup const& G, ElementId g) {
      auto const one = *G.identity();
      for (ElementId h = 0; h < G.size(); ++h) {
        if (G(g, h) == one) {
          return h;
        }
      }
      throw Error(ErrorCode::NotGroup, "element has no inverse", {g});
    }

    // Morphisms m(i, u, g) : u -> gu for i < k, where m(0, u, g) is the
    // derived-category morphism (u, g, gu) and m(i, u, g) = e_u^i + (u,g,gu).
    // Composition multiplies band indices in the right-zero band with
    // identity 0 and multiplies group parts as in the derived category.
    inline CategoryWithAction band_category(FiniteSemigroup const& G,
                                            std::size_t            k) {
      auto const n     = G.size();
      auto const index = [n](std::size_t i, ObjectId u, ElementId g) {
        return (i * n + u) * n + g;
      };
      auto const band = [](std::size_t i, std::size_t j) {
        return j == 0 ? i : j;
      };
      auto const m = k * n * n;

      std::vector<Morphism>    morphisms(m);
      std::vector<std::string> labels(m);
      for (std::size_t i = 0; i < k; ++i) {
        for (ObjectId u = 0; u < n; ++u) {
          for (ElementId g = 0; g < n; ++g) {
            morphisms[index(i, u, g)] = {u, G(g, u)};
            auto const triple = "(" + G.label(u) + "," + G.label(g) + ","
                                + G.label(G(g, u)) + ")";
            std::string prefix;
            if (i == 1 && k == 2) {
              prefix = "e_" + G.label(u) + "+";
            } else if (i > 0) {
              prefix = "e" + std::to_string(i) + "_" + G.label(u) + "+";
            }
            labels[index(i, u, g)] = prefix + triple;
          }
        }
      }
      CompositionTable compose(m, std::vector<std::optional<MorphismId>>(m));
      for (std::size_t i = 0; i < k; ++i) {
        for (ObjectId u = 0; u < n; ++u) {
          for (ElementId g = 0; g < n; ++g) {
            auto const v = G(g, u);
            for (std::size_t j = 0; j < k; ++j) {
              for (ElementId h = 0; h < n; ++h) {
                compose[index(i, u, g)][index(j, v, h)]
                    = index(band(i, j), u, G(h, g));
              }
            }
          }
        }
      }
      auto C = FiniteCategory::build(
          n, std::move(morphisms), std::move(compose), std::move(labels));

      GroupCategoryAction A{G, {}, {}};
      A.on_objects.assign(n, std::vector<ObjectId>(n));
      A.on_morphisms.assign(n, std::vector<MorphismId>(m));
      for (ElementId x = 0; x < n; ++x) {
        auto const x_inv = group_inverse(G, x);
        for (ObjectId u = 0; u < n; ++u) {
          A.on_objects[x][u] = G(x, u);
        }
        for (std::size_t i = 0; i < k; ++i) {
          for (ObjectId u = 0; u < n; ++u) {
            for (ElementId g = 0; g < n; ++g) {
              A.on_morphisms[x][index(i, u, g)]
                  = index(i, G(x, u), G(x, g, x_inv));
            }
          }
        }
      }
      return {std::move(C), std::move(A)};
    }
  }  // namespace detail

  //! Objects are the elements of G, mor(u, v) = {(u, s, v) | v = su},
  //! (u, s, v) + (v, t, w) = (u, ts, w), and G acts by
  //! g(u, s, v) = (gu, gsg^{-1}, gv).  Morphism ids are u * |G| + s.
  inline CategoryWithAction derived_category(FiniteSemigroup const& G) {
    require_group(G, "derived_category");
    auto result = detail::band_category(G, 1);
    if (!result.category.is_groupoid()) {
      throw Error(ErrorCode::InternalInconsistency,
                  "derived category of a group is not a groupoid");
    }
    return result;
  }

  //! The derived category with each mor(u, u) enlarged to a k-element band
  //! {0_u, e_u^1, ..., e_u^{k-1}} where e^i e^j = e^j, extended by
  //! (u, g, gu) + e_{gu}^i = e_u^i + (u, g, gu) and g e_u^i = e_{gu}^i.  The
  //! morphism e_u^i + (u, g, gu) has id (i * |G| + u) * |G| + g.
  inline CategoryWithAction adjoin_band_category(FiniteSemigroup const& G,
                                                 std::size_t            k) {
    require_group(G, "adjoin_band_category");
    if (k < 2 || k > max_band_size) {
      throw Error(ErrorCode::UnsupportedBand,
                  "band size must lie in [2, " + std::to_string(max_band_size)
                      + "]",
                  {k});
    }
    auto       result = detail::band_category(G, k);
    auto const n      = G.size();
    auto const& C     = result.category;
    auto const  one   = *G.identity();
    for (ObjectId u = 0; u < n; ++u) {
      for (ElementId g = 0; g < n; ++g) {
        auto const v = G(g, u);
        if (C.hom(u, v).size() != k) {
          throw Error(ErrorCode::InternalInconsistency,
                      "|mor(u, gu)| != k",
                      {u, g});
        }
        auto const translate = u * n + g;
        for (std::size_t i = 1; i < k; ++i) {
          auto const e_u = (i * n + u) * n + one;
          auto const e_v = (i * n + v) * n + one;
          if (C.compose(translate, e_v) != C.compose(e_u, translate)) {
            throw Error(ErrorCode::InternalInconsistency,
                        "(u,g,gu) + e_gu != e_u + (u,g,gu)",
                        {u, g, i});
          }
          // collapsing e_u + (u,g,gu) onto (u,g,gu) would force e_u = 0_u
          if (C.compose(e_u, translate) == translate) {
            throw Error(ErrorCode::InternalInconsistency,
                        "e_u + (u,g,gu) collapsed onto (u,g,gu)",
                        {u, g, i});
          }
        }
      }
    }
    return result;
  }

  //! G u eG with e^2 = e and eg = ge; ids 0..|G|-1 are G, |G| + g is eg.
  //! Checked isomorphic to C_1 of adjoin_band_category(G, 2) under
  //! g -> ((1,g,g), g), eg -> (e_1 + (1,g,g), g).
  inline FiniteSemigroup adjoined_band_semigroup(FiniteSemigroup const& G) {
    require_group(G, "adjoined_band_semigroup");
    auto const  n = G.size();
    CayleyTable table(2 * n, std::vector<ElementId>(2 * n));
    for (ElementId a = 0; a < 2 * n; ++a) {
      for (ElementId b = 0; b < 2 * n; ++b) {
        table[a][b] = G(a % n, b % n) + (a >= n || b >= n ? n : 0);
      }
    }
    std::vector<std::string> labels;
    for (ElementId g = 0; g < n; ++g) {
      labels.push_back(G.label(g));
    }
    for (ElementId g = 0; g < n; ++g) {
      labels.push_back("e" + G.label(g));
    }
    auto S = FiniteSemigroup::from_table(
        std::move(table), G.identity(), std::move(labels));

    auto const [C, A] = adjoin_band_category(G, 2);
    auto const one    = *G.identity();
    auto const Cu     = c_u_monoid(C, A, one);
    std::vector<ElementId> f(2 * n);
    for (ElementId g = 0; g < n; ++g) {
      f[g]     = *Cu.element_of(one * n + g, g);
      f[n + g] = *Cu.element_of((n + one) * n + g, g);
    }
    if (!is_isomorphism(S, Cu.monoid, f)) {
      throw Error(ErrorCode::InternalInconsistency,
                  "G u eG is not isomorphic to C_1 under the standard map");
    }
    return S;
  }

  ////////////////////////////////////////////////////////////////////////
  // Small-order enumeration
  ////////////////////////////////////////////////////////////////////////

  inline constexpr std::size_t max_enumeration_order = 3;

  //! Calls visit on every associative n x n table (no isomorphism
  //! reduction), in lexicographic order of the row-major entries.
  inline void
  enumerate_semigroups(std::size_t                                  n,
                       std::function<void(FiniteSemigroup const&)> const& visit) {
    if (n > max_enumeration_order) {
      throw Error(ErrorCode::OrderTooLarge,
                  "enumeration is limited to order "
                      + std::to_string(max_enumeration_order),
                  {n});
    }
    if (n == 0) {
      return;
    }
    constexpr auto unset = static_cast<ElementId>(-1);
    CayleyTable    table(n, std::vector<ElementId>(n, unset));

    // No fully-known triple violates associativity.
    auto consistent = [&]() {
      for (ElementId a = 0; a < n; ++a) {
        for (ElementId b = 0; b < n; ++b) {
          auto const ab = table[a][b];
          if (ab == unset) {
            continue;
          }
          for (ElementId c = 0; c < n; ++c) {
            auto const bc = table[b][c];
            if (bc == unset) {
              continue;
            }
            auto const lhs = table[ab][c], rhs = table[a][bc];
            if (lhs != unset && rhs != unset && lhs != rhs) {
              return false;
            }
          }
        }
      }
      return true;
    };

    auto fill = [&](auto&& self, std::size_t cell) -> void {
      if (cell == n * n) {
        visit(FiniteSemigroup::from_table(table));
        return;
      }
      auto& entry = table[cell / n][cell % n];
      for (ElementId v = 0; v < n; ++v) {
        entry = v;
        if (consistent()) {
          self(self, cell + 1);
        }
      }
      entry = unset;
    };
    fill(fill, 0);
  }

  inline std::vector<FiniteSemigroup> all_semigroups(std::size_t n) {
    std::vector<FiniteSemigroup> result;
    enumerate_semigroups(n, [&](FiniteSemigroup const& S) {
      result.push_back(S);
    });
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Category text format
  ////////////////////////////////////////////////////////////////////////

  //! Sections, each introduced by a header line:
  //!   group NAME           the acting group, a fixture name
  //!   objects: N
  //!   morphisms:           lines "id src dst [label]"
  //!   compose:             lines "p q r" meaning p + q = r
  //!   action:              lines "g obj u -> v" or "g mor p -> q"
  //! The "->" is optional.  '#' starts a comment.
  inline CategoryWithAction read_category(std::istream& in) {
    enum class Section { None, Morphisms, Compose, Action };
    std::string                   line, group_name;
    std::size_t                   line_no = 0;
    std::optional<std::size_t>    objects;
    std::vector<std::optional<Morphism>> morphisms;
    std::vector<std::string>      labels;
    std::vector<std::array<std::size_t, 3>> composites;
    std::vector<std::array<std::size_t, 3>> object_moves, morphism_moves;
    Section                       section = Section::None;

    auto fail = [&](std::string const& what) {
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(line_no) + ": " + what,
                  {line_no});
    };
    auto id = [&](std::string const& tok) {
      return detail::parse_id(tok, line_no);
    };

    while (std::getline(in, line)) {
      ++line_no;
      line = detail::strip_comment(line);
      if (detail::is_blank(line)) {
        continue;
      }
      auto toks = detail::tokens(line);
      if (toks[0] == "group") {
        if (toks.size() != 2) {
          fail("expected 'group NAME'");
        }
        group_name = toks[1];
        section    = Section::None;
      } else if (toks[0] == "objects:") {
        if (toks.size() != 2) {
          fail("expected 'objects: N'");
        }
        objects = id(toks[1]);
        section = Section::None;
      } else if (toks[0] == "morphisms:" && toks.size() == 1) {
        section = Section::Morphisms;
      } else if (toks[0] == "compose:" && toks.size() == 1) {
        section = Section::Compose;
      } else if (toks[0] == "action:" && toks.size() == 1) {
        section = Section::Action;
      } else if (section == Section::Morphisms) {
        if (toks.size() != 3 && toks.size() != 4) {
          fail("expected 'id src dst [label]'");
        }
        auto const p = id(toks[0]);
        if (p >= morphisms.size()) {
          morphisms.resize(p + 1);
          labels.resize(p + 1);
        }
        if (morphisms[p]) {
          fail("morphism " + toks[0] + " declared twice");
        }
        morphisms[p] = Morphism{id(toks[1]), id(toks[2])};
        labels[p]    = toks.size() == 4 ? toks[3] : toks[0];
      } else if (section == Section::Compose) {
        if (toks.size() != 3) {
          fail("expected 'p q r'");
        }
        composites.push_back({id(toks[0]), id(toks[1]), id(toks[2])});
      } else if (section == Section::Action) {
        if (toks.size() == 5 && toks[3] == "->") {
          toks.erase(toks.begin() + 3);
        }
        if (toks.size() != 4 || (toks[1] != "obj" && toks[1] != "mor")) {
          fail("expected 'g obj u -> v' or 'g mor p -> q'");
        }
        auto& target = toks[1] == "obj" ? object_moves : morphism_moves;
        target.push_back({id(toks[0]), id(toks[2]), id(toks[3])});
      } else {
        fail("unexpected line outside any section");
      }
    }
    if (group_name.empty() || !objects) {
      throw Error(ErrorCode::ParseError,
                  "category file needs 'group' and 'objects:' lines",
                  {line_no});
    }
    auto const G = fixture(group_name);
    auto const m = morphisms.size();
    std::vector<Morphism> list;
    for (std::size_t p = 0; p < m; ++p) {
      if (!morphisms[p]) {
        throw Error(ErrorCode::ParseError,
                    "morphism ids must be 0.." + std::to_string(m - 1),
                    {p});
      }
      list.push_back(*morphisms[p]);
    }
    CompositionTable compose(m, std::vector<std::optional<MorphismId>>(m));
    for (auto const& [p, q, r] : composites) {
      if (p >= m || q >= m || r >= m) {
        throw Error(ErrorCode::ParseError, "composite refers to an unknown "
                                           "morphism", {p, q, r});
      }
      compose[p][q] = r;
    }
    auto C = FiniteCategory::build(
        *objects, std::move(list), std::move(compose), std::move(labels));

    GroupCategoryAction A{G, {}, {}};
    constexpr auto unset = static_cast<std::size_t>(-1);
    A.on_objects.assign(G.size(), std::vector<ObjectId>(*objects, unset));
    A.on_morphisms.assign(G.size(), std::vector<MorphismId>(m, unset));
    for (auto const& [g, u, v] : object_moves) {
      if (g >= G.size() || u >= *objects) {
        throw Error(ErrorCode::ParseError, "action line out of range",
                    {g, u, v});
      }
      A.on_objects[g][u] = v;
    }
    for (auto const& [g, p, q] : morphism_moves) {
      if (g >= G.size() || p >= m) {
        throw Error(ErrorCode::ParseError, "action line out of range",
                    {g, p, q});
      }
      A.on_morphisms[g][p] = q;
    }
    for (ElementId g = 0; g < G.size(); ++g) {
      for (auto u : A.on_objects[g]) {
        if (u == unset) {
          throw Error(ErrorCode::ParseError,
                      "action missing an object image",
                      {g});
        }
      }
      for (auto p : A.on_morphisms[g]) {
        if (p == unset) {
          throw Error(ErrorCode::ParseError,
                      "action missing a morphism image",
                      {g});
        }
      }
    }
    validate_group_action(C, A);
    return {std::move(C), std::move(A)};
  }

  inline std::string format_category(CategoryWithAction const& CA,
                                     std::string const&        group_name) {
    auto const&        C = CA.category;
    auto const&        A = CA.action;
    std::ostringstream os;
    os << "group " << group_name << '\n';
    os << "objects: " << C.object_count() << '\n';
    os << "morphisms:\n";
    for (MorphismId p = 0; p < C.morphism_count(); ++p) {
      os << p << ' ' << C.source(p) << ' ' << C.target(p) << ' '
         << C.label(p) << '\n';
    }
    os << "compose:\n";
    for (MorphismId p = 0; p < C.morphism_count(); ++p) {
      for (MorphismId q = 0; q < C.morphism_count(); ++q) {
        if (auto r = C.compose(p, q)) {
          os << p << ' ' << q << ' ' << *r << '\n';
        }
      }
    }
    os << "action:\n";
    for (ElementId g = 0; g < A.group.size(); ++g) {
      for (ObjectId u = 0; u < C.object_count(); ++u) {
        os << g << " obj " << u << " -> " << A.on_objects[g][u] << '\n';
      }
      for (MorphismId p = 0; p < C.morphism_count(); ++p) {
        os << g << " mor " << p << " -> " << A.on_morphisms[g][p] << '\n';
      }
    }
    return os.str();
  }

}  // namespace edense

#endif  // EDENSE_CONSTRUCTION_HPP_

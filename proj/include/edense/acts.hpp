#ifndef EDENSE_ACTS_HPP_
#define EDENSE_ACTS_HPP_

#include <cstddef>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "closures.hpp"
#include "core.hpp"
#include "element_set.hpp"
#include "error.hpp"
#include "semigroup.hpp"

namespace edense {

  using PointId  = std::size_t;
  using PointSet = ElementSet;

  // Raw partial table: entry [s][x] is sx, or nullopt when undefined.
  using PartialTable = std::vector<std::vector<std::optional<PointId>>>;

  ////////////////////////////////////////////////////////////////////////
  // Total acts
  ////////////////////////////////////////////////////////////////////////

  //! A total left action S x X -> X, stored as table[s][x].  Used as input
  //! to the Wagner-Preston restriction and by the cryptosystem layer.
  struct TotalAct {
    FiniteSemigroup                   semigroup;
    std::vector<std::vector<PointId>> table;
    std::vector<std::string>          point_labels;

    std::size_t carrier_size() const noexcept {
      return table.empty() ? 0 : table.front().size();
    }

    PointId operator()(ElementId s, PointId x) const {
      return table[s][x];
    }

    std::string point_label(PointId x) const {
      return point_labels.empty() ? std::to_string(x) : point_labels[x];
    }
  };

  //! Throws NotAssociativeAction (witness s, t, x) if (st)x != s(tx), or
  //! OutOfRangeEntry for bad table shapes.
  inline void check_total_act(TotalAct const& X) {
    auto const& S = X.semigroup;
    auto const  m = X.carrier_size();
    if (X.table.size() != S.size() || m == 0) {
      throw Error(ErrorCode::MalformedTable,
                  "a total act needs one row per element and a non-empty "
                  "carrier");
    }
    for (ElementId s = 0; s < S.size(); ++s) {
      if (X.table[s].size() != m) {
        throw Error(ErrorCode::MalformedTable, "ragged action table", {s});
      }
      for (PointId x = 0; x < m; ++x) {
        if (X.table[s][x] >= m) {
          throw Error(ErrorCode::OutOfRangeEntry,
                      "action entry out of range",
                      {s, x, X.table[s][x]});
        }
      }
    }
    for (ElementId s = 0; s < S.size(); ++s) {
      for (ElementId t = 0; t < S.size(); ++t) {
        for (PointId x = 0; x < m; ++x) {
          if (X(S(s, t), x) != X(s, X(t, x))) {
            throw Error(ErrorCode::NotAssociativeAction,
                        "(st)x != s(tx)",
                        {s, t, x});
          }
        }
      }
    }
  }

  // S acting on itself by left multiplication.
  inline TotalAct regular_act(FiniteSemigroup const& S) {
    TotalAct X{S, S.table(), {}};
    for (ElementId x = 0; x < S.size(); ++x) {
      X.point_labels.push_back(S.label(x));
    }
    return X;
  }

  inline bool is_left_ideal(FiniteSemigroup const& S, ElementSet const& I) {
    if (I.empty()) {
      return false;
    }
    for (ElementId s = 0; s < S.size(); ++s) {
      for (auto x : I) {
        if (!I.contains(S(s, x))) {
          return false;
        }
      }
    }
    return true;
  }

  //! The left ideal I with S acting by multiplication; point k is the k-th
  //! least member of I.
  inline TotalAct left_ideal_act(FiniteSemigroup const& S,
                                 ElementSet const&      I) {
    if (!is_left_ideal(S, I)) {
      throw Error(ErrorCode::PreconditionFailed,
                  I.to_string() + " is not a left ideal");
    }
    auto const members = I.members();
    std::vector<PointId> index(S.size(), 0);
    for (PointId k = 0; k < members.size(); ++k) {
      index[members[k]] = k;
    }
    TotalAct X{S, {}, {}};
    X.table.assign(S.size(), std::vector<PointId>(members.size()));
    for (ElementId s = 0; s < S.size(); ++s) {
      for (PointId k = 0; k < members.size(); ++k) {
        X.table[s][k] = index[S(s, members[k])];
      }
    }
    for (auto x : members) {
      X.point_labels.push_back(S.label(x));
    }
    return X;
  }

  ////////////////////////////////////////////////////////////////////////
  // E-dense partial acts
  ////////////////////////////////////////////////////////////////////////

  //! A partial action of S on the points 0, ..., m - 1 satisfying the
  //! E-dense act axioms: (st)x is defined iff s(tx) is and then they agree;
  //! sx = sy forces x = y; and whenever sx is defined some s' in W(s) acts
  //! on sx.  Obtain instances with PartialAct::validate.
  class PartialAct {
   public:
    //! Throws OutOfRangeEntry, CompositionViolation (witness s, t, x),
    //! NotCancellative (witness s, x, y) or NotReflexive (witness s, x).
    static PartialAct validate(FiniteSemigroup           S,
                               PartialTable              table,
                               std::vector<std::string> labels = {}) {
      if (table.size() != S.size() || table.front().empty()) {
        throw Error(ErrorCode::MalformedTable,
                    "an act table needs one row per element and a non-empty "
                    "carrier");
      }
      auto const m = table.front().size();
      for (ElementId s = 0; s < S.size(); ++s) {
        if (table[s].size() != m) {
          throw Error(ErrorCode::MalformedTable, "ragged act table", {s});
        }
        for (PointId x = 0; x < m; ++x) {
          if (table[s][x] && *table[s][x] >= m) {
            throw Error(ErrorCode::OutOfRangeEntry,
                        "act entry out of range",
                        {s, x, *table[s][x]});
          }
        }
      }
      if (!labels.empty() && labels.size() != m) {
        throw Error(ErrorCode::MalformedTable, "expected one label per point");
      }
      // composition law, both directions
      for (ElementId s = 0; s < S.size(); ++s) {
        for (ElementId t = 0; t < S.size(); ++t) {
          for (PointId x = 0; x < m; ++x) {
            auto const lhs = table[S(s, t)][x];
            std::optional<PointId> rhs;
            if (auto tx = table[t][x]) {
              rhs = table[s][*tx];
            }
            if (lhs != rhs) {
              throw Error(ErrorCode::CompositionViolation,
                          "(st)x and s(tx) differ in definedness or value",
                          {s, t, x});
            }
          }
        }
      }
      for (ElementId s = 0; s < S.size(); ++s) {
        for (PointId x = 0; x < m; ++x) {
          if (!table[s][x]) {
            continue;
          }
          for (PointId y = x + 1; y < m; ++y) {
            if (table[s][y] == table[s][x]) {
              throw Error(ErrorCode::NotCancellative,
                          "sx = sy with x != y",
                          {s, x, y});
            }
          }
        }
      }
      for (ElementId s = 0; s < S.size(); ++s) {
        auto const W = weak_inverses(S, s);
        for (PointId x = 0; x < m; ++x) {
          auto const sx = table[s][x];
          if (!sx) {
            continue;
          }
          bool ok = false;
          for (auto w : W) {
            if (table[w][*sx]) {
              ok = true;
              break;
            }
          }
          if (!ok) {
            throw Error(ErrorCode::NotReflexive,
                        "no weak inverse of s acts on sx",
                        {s, x});
          }
        }
      }
      return PartialAct(std::move(S), std::move(table), std::move(labels));
    }

    FiniteSemigroup const& semigroup() const noexcept {
      return _semigroup;
    }

    std::size_t carrier_size() const noexcept {
      return _table.front().size();
    }

    std::optional<PointId> act(ElementId s, PointId x) const {
      return _table[s][x];
    }

    bool defined(ElementId s, PointId x) const {
      return _table[s][x].has_value();
    }

    PartialTable const& table() const noexcept {
      return _table;
    }

    // D_s = {x | sx defined}
    PointSet domain(ElementId s) const {
      PointSet result(carrier_size());
      for (PointId x = 0; x < carrier_size(); ++x) {
        if (defined(s, x)) {
          result.insert(x);
        }
      }
      return result;
    }

    // D^x = {s | sx defined}
    ElementSet point_domain(PointId x) const {
      ElementSet result(_semigroup.size());
      for (ElementId s = 0; s < _semigroup.size(); ++s) {
        if (defined(s, x)) {
          result.insert(s);
        }
      }
      return result;
    }

    std::string point_label(PointId x) const {
      return _labels.empty() ? std::to_string(x) : _labels[x];
    }

    std::vector<std::string> const& point_labels() const noexcept {
      return _labels;
    }

   private:
    PartialAct(FiniteSemigroup S, PartialTable table,
               std::vector<std::string> labels)
        : _semigroup(std::move(S)),
          _table(std::move(table)),
          _labels(std::move(labels)) {}

    FiniteSemigroup          _semigroup;
    PartialTable             _table;
    std::vector<std::string> _labels;
  };

  inline PartialAct validate_act(FiniteSemigroup const& S, PartialTable table) {
    return PartialAct::validate(S, std::move(table));
  }

  // Every entry defined.
  inline PartialAct as_partial_act(TotalAct const& X) {
    PartialTable table(X.semigroup.size(),
                       std::vector<std::optional<PointId>>(X.carrier_size()));
    for (ElementId s = 0; s < X.semigroup.size(); ++s) {
      for (PointId x = 0; x < X.carrier_size(); ++x) {
        table[s][x] = X(s, x);
      }
    }
    return PartialAct::validate(X.semigroup, std::move(table), X.point_labels);
  }

  //! Wagner-Preston restriction of a total act: s acts on
  //! D_s = {x | x = s'sx for some s' in W(s)}.
  inline PartialAct wagner_preston(TotalAct const& X) {
    auto const& S = X.semigroup;
    require_semilattice(S, "wagner_preston");
    check_total_act(X);
    PartialTable table(S.size(),
                       std::vector<std::optional<PointId>>(X.carrier_size()));
    for (ElementId s = 0; s < S.size(); ++s) {
      auto const W = weak_inverses(S, s);
      for (PointId x = 0; x < X.carrier_size(); ++x) {
        for (auto w : W) {
          if (X(S(w, s), x) == x) {
            table[s][x] = X(s, x);
            break;
          }
        }
      }
    }
    return PartialAct::validate(S, std::move(table), X.point_labels);
  }

  inline PartialAct wagner_preston(FiniteSemigroup const& S) {
    return wagner_preston(regular_act(S));
  }

  //! [e] = {s | s <=_h e} = eE.  The equality with W(e) is asserted.
  inline ElementSet order_ideal(FiniteSemigroup const& S, ElementId e) {
    if (e >= S.size() || !S.is_idempotent(e)) {
      throw Error(ErrorCode::NotIdempotent, "order ideal of a non-idempotent",
                  {e});
    }
    require_semilattice(S, "order_ideal");
    ElementSet result(S.size());
    for (ElementId f = 0; f < S.size(); ++f) {
      if (S.is_idempotent(f)) {
        result.insert(S(e, f));
      }
    }
    if (result != weak_inverses(S, e)) {
      throw Error(ErrorCode::InternalInconsistency, "[e] != W(e)", {e});
    }
    return result;
  }

  struct MunnAct {
    PartialAct             act;
    std::vector<ElementId> points;  // point k is the idempotent points[k]
  };

  //! S acting on E: s * x = s x s' for x in [s's], s' in W(s).  Independence
  //! of the choice of s' is checked (WellDefinednessViolation, witness
  //! s, x, s', s*).
  inline MunnAct munn_act(FiniteSemigroup const& S) {
    require_semilattice(S, "munn_act");
    auto const points = idempotents(S).members();
    std::vector<PointId> index(S.size(), 0);
    for (PointId k = 0; k < points.size(); ++k) {
      index[points[k]] = k;
    }
    PartialTable table(S.size(),
                       std::vector<std::optional<PointId>>(points.size()));
    for (ElementId s = 0; s < S.size(); ++s) {
      std::vector<std::optional<ElementId>> via(points.size());
      for (auto w : weak_inverses(S, s)) {
        auto const ideal = order_ideal(S, S(w, s));
        for (auto x : ideal) {
          auto const value = S(s, x, w);
          auto&      slot  = via[index[x]];
          if (slot && *slot != value) {
            throw Error(ErrorCode::WellDefinednessViolation,
                        "s x s' depends on the choice of s'",
                        {s, x, w});
          }
          slot = value;
        }
      }
      for (PointId k = 0; k < points.size(); ++k) {
        if (via[k]) {
          table[s][k] = index[*via[k]];
        }
      }
    }
    std::vector<std::string> labels;
    for (auto e : points) {
      labels.push_back(S.label(e));
    }
    return {PartialAct::validate(S, std::move(table), std::move(labels)),
            points};
  }

  // Sx = {sx | s in D^x} u {x}
  inline PointSet orbit(PartialAct const& X, PointId x) {
    PointSet result(X.carrier_size(), {x});
    for (ElementId s = 0; s < X.semigroup().size(); ++s) {
      if (auto sx = X.act(s, x)) {
        result.insert(*sx);
      }
    }
    return result;
  }

  // S_x = {s | sx = x}
  inline ElementSet stabilizer(PartialAct const& X, PointId x) {
    ElementSet result(X.semigroup().size());
    for (ElementId s = 0; s < X.semigroup().size(); ++s) {
      if (X.act(s, x) == x) {
        result.insert(s);
      }
    }
    return result;
  }

  // E^x = E n D^x
  inline ElementSet idempotent_domain(PartialAct const& X, PointId x) {
    return idempotents(X.semigroup()) & X.point_domain(x);
  }

  // Distinct orbits, ordered by least member.
  inline std::vector<PointSet> orbits(PartialAct const& X) {
    std::vector<PointSet> result;
    PointSet              seen(X.carrier_size());
    for (PointId x = 0; x < X.carrier_size(); ++x) {
      if (!seen.contains(x)) {
        auto O = orbit(X, x);
        seen |= O;
        result.push_back(std::move(O));
      }
    }
    return result;
  }

  struct ActProperties {
    bool effective;
    bool transitive;
    bool indecomposable;
    bool locally_free;
  };

  inline bool is_locally_free(PartialAct const& X) {
    auto const& S = X.semigroup();
    for (PointId x = 0; x < X.carrier_size(); ++x) {
      if (stabilizer(X, x) != omega_h(S, idempotent_domain(X, x))) {
        return false;
      }
    }
    return true;
  }

  inline ActProperties act_properties(PartialAct const& X) {
    auto const m = X.carrier_size();
    auto const n = X.semigroup().size();

    bool effective = true;
    for (PointId x = 0; x < m && effective; ++x) {
      effective = !X.point_domain(x).empty();
    }

    bool transitive = true;
    for (PointId x = 0; x < m && transitive; ++x) {
      PointSet reach(m);
      for (ElementId s = 0; s < n; ++s) {
        if (auto sx = X.act(s, x)) {
          reach.insert(*sx);
        }
      }
      transitive = reach.size() == m;
    }

    // Components of the graph x -- sx; each component is a subact.
    std::vector<PointId> parent(m);
    for (PointId x = 0; x < m; ++x) {
      parent[x] = x;
    }
    auto find = [&](PointId x) {
      while (parent[x] != x) {
        x = parent[x] = parent[parent[x]];
      }
      return x;
    };
    std::size_t components = m;
    for (ElementId s = 0; s < n; ++s) {
      for (PointId x = 0; x < m; ++x) {
        if (auto sx = X.act(s, x)) {
          auto a = find(x), b = find(*sx);
          if (a != b) {
            parent[a] = b;
            --components;
          }
        }
      }
    }

    return {effective, transitive, components == 1, is_locally_free(X)};
  }

  //! Image of a subset of points closed under the action, as an act on its
  //! own (renumbered) points.
  struct SubAct {
    PartialAct           act;
    std::vector<PointId> points;  // new point k is old point points[k]
  };

  inline SubAct induced_subact(PartialAct const& X, PointSet const& Y) {
    auto const& S      = X.semigroup();
    auto const  points = Y.members();
    std::vector<PointId> index(X.carrier_size(), 0);
    for (PointId k = 0; k < points.size(); ++k) {
      index[points[k]] = k;
    }
    PartialTable table(S.size(),
                       std::vector<std::optional<PointId>>(points.size()));
    for (ElementId s = 0; s < S.size(); ++s) {
      for (PointId k = 0; k < points.size(); ++k) {
        if (auto sy = X.act(s, points[k])) {
          if (!Y.contains(*sy)) {
            throw Error(ErrorCode::PreconditionFailed,
                        "subset is not closed under the action",
                        {s, points[k]});
          }
          table[s][k] = index[*sy];
        }
      }
    }
    std::vector<std::string> labels;
    for (auto y : points) {
      labels.push_back(X.point_label(y));
    }
    return {PartialAct::validate(S, std::move(table), std::move(labels)),
            points};
  }

  //! x in D_s iff f(x) in D_s, and then f(sx) = s f(x).
  inline bool is_s_map(PartialAct const&           X,
                       PartialAct const&           Y,
                       std::vector<PointId> const& f) {
    if (f.size() != X.carrier_size()) {
      return false;
    }
    for (ElementId s = 0; s < X.semigroup().size(); ++s) {
      for (PointId x = 0; x < X.carrier_size(); ++x) {
        if (f[x] >= Y.carrier_size()) {
          return false;
        }
        auto sx  = X.act(s, x);
        auto sfx = Y.act(s, f[x]);
        if (sx.has_value() != sfx.has_value() || (sx && f[*sx] != *sfx)) {
          return false;
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Gradings
  ////////////////////////////////////////////////////////////////////////

  struct GradingOutcome {
    std::optional<std::vector<ElementId>> grading;  // p(x) per point
    std::string                           reason;   // set when absent
  };

  //! p(x) = the <=_h-least idempotent in S_x.  Absent (with a reason) when a
  //! point is not effective or its stabilizer has no least idempotent.  For
  //! a grading found, D_e = p^{-1}([e]) is asserted for every idempotent e.
  inline GradingOutcome grading(PartialAct const& X) {
    auto const& S = X.semigroup();
    require_semilattice(S, "grading");
    auto const           E = idempotents(S);
    std::vector<ElementId> p(X.carrier_size());
    for (PointId x = 0; x < X.carrier_size(); ++x) {
      if (X.point_domain(x).empty()) {
        return {std::nullopt, "point " + X.point_label(x) + " is not effective"};
      }
      auto const Ex = stabilizer(X, x) & E;
      std::optional<ElementId> least;
      for (auto f : Ex) {
        bool ok = true;
        for (auto e : Ex) {
          ok = ok && h_leq(S, f, e);
        }
        if (ok) {
          least = f;
          break;
        }
      }
      if (!least) {
        return {std::nullopt,
                "stabilizer of point " + X.point_label(x)
                    + " has no least idempotent"};
      }
      p[x] = *least;
    }
    for (auto e : E) {
      auto const ideal = order_ideal(S, e);
      for (PointId x = 0; x < X.carrier_size(); ++x) {
        if (X.defined(e, x) != ideal.contains(p[x])) {
          throw Error(ErrorCode::InternalInconsistency,
                      "D_e != p^{-1}([e])",
                      {e, x});
        }
      }
    }
    return {std::move(p), {}};
  }

  ////////////////////////////////////////////////////////////////////////
  // Isomorphism of acts
  ////////////////////////////////////////////////////////////////////////

  inline constexpr std::size_t default_isomorphism_bound = 12;

  //! A bijective S-map X -> Y (whose inverse is then an S-map too), found by
  //! backtracking.  Points are only matched when their domains D^x and
  //! stabilizers agree; each choice is propagated along the action.
  inline std::optional<std::vector<PointId>>
  find_act_isomorphism(PartialAct const& X,
                       PartialAct const& Y,
                       std::size_t       bound = default_isomorphism_bound) {
    if (!(X.semigroup() == Y.semigroup())) {
      throw Error(ErrorCode::PreconditionFailed,
                  "acts are over different semigroups");
    }
    auto const m = X.carrier_size();
    if (m != Y.carrier_size()) {
      return std::nullopt;
    }
    if (m > bound) {
      throw Error(ErrorCode::CarrierTooLarge,
                  "isomorphism search is bounded to "
                      + std::to_string(bound) + " points",
                  {m});
    }
    auto const n = X.semigroup().size();
    std::vector<std::pair<ElementSet, ElementSet>> inv_x, inv_y;
    std::vector<std::size_t> orb_x, orb_y;
    for (PointId x = 0; x < m; ++x) {
      inv_x.emplace_back(X.point_domain(x), stabilizer(X, x));
      inv_y.emplace_back(Y.point_domain(x), stabilizer(Y, x));
      orb_x.push_back(orbit(X, x).size());
      orb_y.push_back(orbit(Y, x).size());
    }
    constexpr auto unset = static_cast<PointId>(-1);
    std::vector<PointId> f(m, unset), g(m, unset);

    auto compatible = [&](PointId x, PointId y) {
      return orb_x[x] == orb_y[y] && inv_x[x] == inv_y[y];
    };

    auto assign = [&](PointId a, PointId b, std::vector<PointId>& trail) {
      std::vector<std::pair<PointId, PointId>> queue{{a, b}};
      while (!queue.empty()) {
        auto [x, y] = queue.back();
        queue.pop_back();
        if (f[x] != unset || g[y] != unset) {
          if (f[x] != y || g[y] != x) {
            return false;
          }
          continue;
        }
        if (!compatible(x, y)) {
          return false;
        }
        f[x] = y;
        g[y] = x;
        trail.push_back(x);
        for (ElementId s = 0; s < n; ++s) {
          if (auto sx = X.act(s, x)) {
            queue.emplace_back(*sx, *Y.act(s, y));
          }
        }
      }
      return true;
    };

    auto undo = [&](std::vector<PointId> const& trail) {
      for (auto x : trail) {
        g[f[x]] = unset;
        f[x]    = unset;
      }
    };

    auto search = [&](auto&& self) -> bool {
      PointId next = unset;
      for (PointId x = 0; x < m; ++x) {
        if (f[x] == unset) {
          next = x;
          break;
        }
      }
      if (next == unset) {
        return true;
      }
      for (PointId y = 0; y < m; ++y) {
        if (g[y] != unset || !compatible(next, y)) {
          continue;
        }
        std::vector<PointId> trail;
        if (assign(next, y, trail) && self(self)) {
          return true;
        }
        undo(trail);
      }
      return false;
    };

    if (!search(search) || !is_s_map(X, Y, f)) {
      return std::nullopt;
    }
    return f;
  }

  ////////////////////////////////////////////////////////////////////////
  // Partial-act text format
  ////////////////////////////////////////////////////////////////////////

  // "n m", then n rows of m entries, each a point id or '-'.
  inline PartialAct read_partial_act(std::istream& in, FiniteSemigroup const& S) {
    std::string                line;
    std::size_t                line_no = 0;
    std::optional<std::size_t> rows, cols;
    PartialTable               table;
    while (std::getline(in, line)) {
      ++line_no;
      line = detail::strip_comment(line);
      if (detail::is_blank(line)) {
        continue;
      }
      auto toks = detail::tokens(line);
      if (!rows) {
        if (toks.size() != 2) {
          throw Error(ErrorCode::ParseError,
                      "line " + std::to_string(line_no) + ": expected 'n m'",
                      {line_no});
        }
        rows = detail::parse_id(toks[0], line_no);
        cols = detail::parse_id(toks[1], line_no);
        if (*rows != S.size() || *cols == 0) {
          throw Error(ErrorCode::ParseError,
                      "line " + std::to_string(line_no)
                          + ": n must equal the semigroup order and m be "
                            "positive",
                      {line_no});
        }
        continue;
      }
      if (table.size() == *rows || toks.size() != *cols) {
        throw Error(ErrorCode::ParseError,
                    "line " + std::to_string(line_no) + ": malformed row",
                    {line_no});
      }
      std::vector<std::optional<PointId>> row;
      for (auto const& tok : toks) {
        if (tok == "-") {
          row.emplace_back();
        } else {
          row.emplace_back(detail::parse_id(tok, line_no));
        }
      }
      table.push_back(std::move(row));
    }
    if (!rows || table.size() != *rows) {
      throw Error(ErrorCode::ParseError, "unexpected end of input", {line_no});
    }
    return PartialAct::validate(S, std::move(table));
  }

  inline std::string format_partial_act(PartialAct const& X) {
    std::ostringstream os;
    os << X.semigroup().size() << ' ' << X.carrier_size() << '\n';
    for (ElementId s = 0; s < X.semigroup().size(); ++s) {
      for (PointId x = 0; x < X.carrier_size(); ++x) {
        os << (x == 0 ? "" : " ");
        if (auto sx = X.act(s, x)) {
          os << *sx;
        } else {
          os << '-';
        }
      }
      os << '\n';
    }
    return os.str();
  }

}  // namespace edense

#endif  // EDENSE_ACTS_HPP_

#ifndef EDENSE_SEMIGROUP_HPP_
#define EDENSE_SEMIGROUP_HPP_

#include <cstddef>
#include <istream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "element_set.hpp"
#include "error.hpp"

namespace edense {

  using CayleyTable = std::vector<std::vector<ElementId>>;

  //! A finite semigroup given by its Cayley table on the ids 0, ..., n - 1.
  //!
  //! Instances are immutable and can only be obtained through
  //! FiniteSemigroup::from_table, which checks associativity on all n^3
  //! triples.  Copies share the underlying table.
  class FiniteSemigroup {
    struct Data {
      std::size_t              n;
      std::vector<ElementId>   table;  // row-major, table[i * n + j] = ij
      std::optional<ElementId> identity;
      std::vector<std::string> labels;
      std::vector<char>        idempotent;
    };

   public:
    //! Validate \p table and build the semigroup.
    //!
    //! Throws Error with code MalformedTable (empty or non-square table),
    //! OutOfRangeEntry (witness: row, column, entry), NonAssociative
    //! (witness: the lexicographically first failing triple i, j, k) or
    //! BadIdentityHint (witness: the hint).  The identity is detected
    //! automatically when no hint is given.
    static FiniteSemigroup from_table(CayleyTable                    table,
                                      std::optional<ElementId>       hint = {},
                                      std::vector<std::string> labels = {}) {
      auto const n = table.size();
      if (n == 0) {
        throw Error(ErrorCode::MalformedTable, "a semigroup must be non-empty");
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (table[i].size() != n) {
          throw Error(ErrorCode::MalformedTable,
                      "row " + std::to_string(i) + " has "
                          + std::to_string(table[i].size())
                          + " entries, expected " + std::to_string(n),
                      {i});
        }
        for (std::size_t j = 0; j < n; ++j) {
          if (table[i][j] >= n) {
            throw Error(ErrorCode::OutOfRangeEntry,
                        "entry (" + std::to_string(i) + ", " + std::to_string(j)
                            + ") is out of range",
                        {i, j, table[i][j]});
          }
        }
      }
      if (!labels.empty() && labels.size() != n) {
        throw Error(ErrorCode::MalformedTable,
                    "expected " + std::to_string(n) + " labels");
      }
      auto data = std::make_shared<Data>();
      data->n   = n;
      data->table.reserve(n * n);
      for (auto const& row : table) {
        data->table.insert(data->table.end(), row.begin(), row.end());
      }
      auto const& t = data->table;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          auto const ij = t[i * n + j];
          for (std::size_t k = 0; k < n; ++k) {
            if (t[ij * n + k] != t[i * n + t[j * n + k]]) {
              throw Error(ErrorCode::NonAssociative,
                          "(ij)k != i(jk)",
                          {i, j, k});
            }
          }
        }
      }
      auto is_identity = [&](ElementId e) {
        for (std::size_t x = 0; x < n; ++x) {
          if (t[e * n + x] != x || t[x * n + e] != x) {
            return false;
          }
        }
        return true;
      };
      if (hint) {
        if (*hint >= n || !is_identity(*hint)) {
          throw Error(ErrorCode::BadIdentityHint,
                      "hint is not a two-sided identity",
                      {*hint});
        }
        data->identity = *hint;
      } else {
        for (ElementId e = 0; e < n; ++e) {
          if (is_identity(e)) {
            data->identity = e;
            break;
          }
        }
      }
      data->idempotent.resize(n);
      for (ElementId e = 0; e < n; ++e) {
        data->idempotent[e] = t[e * n + e] == e;
      }
      data->labels = std::move(labels);
      return FiniteSemigroup(std::move(data));
    }

    std::size_t size() const noexcept {
      return _data->n;
    }

    ElementId product(ElementId a, ElementId b) const noexcept {
      return _data->table[a * _data->n + b];
    }

    ElementId operator()(ElementId a, ElementId b) const noexcept {
      return product(a, b);
    }

    ElementId operator()(ElementId a, ElementId b, ElementId c) const noexcept {
      return product(product(a, b), c);
    }

    std::optional<ElementId> identity() const noexcept {
      return _data->identity;
    }

    bool is_monoid() const noexcept {
      return _data->identity.has_value();
    }

    bool is_idempotent(ElementId e) const noexcept {
      return _data->idempotent[e] != 0;
    }

    bool has_labels() const noexcept {
      return !_data->labels.empty();
    }

    std::string label(ElementId x) const {
      return _data->labels.empty() ? std::to_string(x) : _data->labels[x];
    }

    std::vector<std::string> const& labels() const noexcept {
      return _data->labels;
    }

    CayleyTable table() const {
      CayleyTable result(size(), std::vector<ElementId>(size()));
      for (ElementId i = 0; i < size(); ++i) {
        for (ElementId j = 0; j < size(); ++j) {
          result[i][j] = product(i, j);
        }
      }
      return result;
    }

    ElementSet empty_set() const {
      return ElementSet(size());
    }

    ElementSet all_elements() const {
      return ElementSet::full(size());
    }

    // Elementwise product AB.
    ElementSet product(ElementSet const& lhs, ElementSet const& rhs) const {
      ElementSet result(size());
      for (auto a : lhs) {
        for (auto b : rhs) {
          result.insert(product(a, b));
        }
      }
      return result;
    }

    friend bool operator==(FiniteSemigroup const& lhs,
                           FiniteSemigroup const& rhs) {
      return lhs._data == rhs._data
             || (lhs._data->n == rhs._data->n
                 && lhs._data->table == rhs._data->table);
    }

   private:
    explicit FiniteSemigroup(std::shared_ptr<Data const> data)
        : _data(std::move(data)) {}

    std::shared_ptr<Data const> _data;
  };

  ////////////////////////////////////////////////////////////////////////
  // Text formats
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline std::string strip_comment(std::string line) {
      if (auto pos = line.find('#'); pos != std::string::npos) {
        line.erase(pos);
      }
      return line;
    }

    inline bool is_blank(std::string const& line) {
      return line.find_first_not_of(" \t\r") == std::string::npos;
    }

    inline std::vector<std::string> tokens(std::string const& line) {
      std::istringstream       is(line);
      std::vector<std::string> result;
      std::string              tok;
      while (is >> tok) {
        result.push_back(tok);
      }
      return result;
    }

    inline std::size_t parse_id(std::string const& tok, std::size_t line_no) {
      if (tok.empty()
          || tok.find_first_not_of("0123456789") != std::string::npos) {
        throw Error(ErrorCode::ParseError,
                    "line " + std::to_string(line_no) + ": '" + tok
                        + "' is not a non-negative base-10 integer",
                    {line_no});
      }
      return std::stoull(tok);
    }
  }  // namespace detail

  // Cayley table text: n, then n rows of n ids, then optionally
  // "identity <id>".  '#' starts a comment.  ParseError witnesses carry the
  // 1-based line number.
  inline FiniteSemigroup read_cayley_table(std::istream& in) {
    std::string                        line;
    std::size_t                        line_no = 0;
    std::optional<std::size_t>         n;
    CayleyTable                        table;
    std::optional<ElementId>           identity;
    while (std::getline(in, line)) {
      ++line_no;
      line = detail::strip_comment(line);
      if (detail::is_blank(line)) {
        continue;
      }
      auto toks = detail::tokens(line);
      if (!n) {
        if (toks.size() != 1) {
          throw Error(ErrorCode::ParseError,
                      "line " + std::to_string(line_no)
                          + ": expected the order n",
                      {line_no});
        }
        n = detail::parse_id(toks[0], line_no);
        if (*n == 0) {
          throw Error(ErrorCode::ParseError,
                      "line " + std::to_string(line_no)
                          + ": order must be positive",
                      {line_no});
        }
        continue;
      }
      if (toks[0] == "identity") {
        if (toks.size() != 2 || table.size() != *n || identity) {
          throw Error(ErrorCode::ParseError,
                      "line " + std::to_string(line_no)
                          + ": malformed identity line",
                      {line_no});
        }
        identity = detail::parse_id(toks[1], line_no);
        continue;
      }
      if (table.size() == *n || identity) {
        throw Error(ErrorCode::ParseError,
                    "line " + std::to_string(line_no) + ": unexpected row",
                    {line_no});
      }
      if (toks.size() != *n) {
        throw Error(ErrorCode::ParseError,
                    "line " + std::to_string(line_no) + ": row has "
                        + std::to_string(toks.size()) + " entries, expected "
                        + std::to_string(*n),
                    {line_no});
      }
      std::vector<ElementId> row;
      row.reserve(*n);
      for (auto const& tok : toks) {
        row.push_back(detail::parse_id(tok, line_no));
      }
      table.push_back(std::move(row));
    }
    if (!n || table.size() != *n) {
      throw Error(ErrorCode::ParseError,
                  "unexpected end of input after line "
                      + std::to_string(line_no),
                  {line_no});
    }
    return FiniteSemigroup::from_table(std::move(table), identity);
  }

  inline FiniteSemigroup parse_cayley_table(std::string const& text) {
    std::istringstream is(text);
    return read_cayley_table(is);
  }

  inline std::string format_cayley_table(FiniteSemigroup const& S) {
    std::ostringstream os;
    os << S.size() << '\n';
    for (ElementId i = 0; i < S.size(); ++i) {
      for (ElementId j = 0; j < S.size(); ++j) {
        os << (j == 0 ? "" : " ") << S(i, j);
      }
      os << '\n';
    }
    if (auto e = S.identity()) {
      os << "identity " << *e << '\n';
    }
    return os.str();
  }

  // Subset text: whitespace-separated ids on one line.
  inline ElementSet parse_subset(std::string const& text, std::size_t universe) {
    ElementSet result(universe);
    for (auto const& tok : detail::tokens(detail::strip_comment(text))) {
      auto id = detail::parse_id(tok, 1);
      if (id >= universe) {
        throw Error(ErrorCode::OutOfRangeEntry,
                    "subset member " + tok + " is out of range",
                    {id});
      }
      result.insert(id);
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Isomorphism
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    // Power sequence shape of x: (index, period) of the monogenic
    // subsemigroup.  Preserved by isomorphisms.
    inline std::pair<std::size_t, std::size_t>
    index_period(FiniteSemigroup const& S, ElementId x) {
      std::vector<std::size_t> seen(S.size(), 0);
      ElementId                p = x;
      for (std::size_t k = 1;; ++k) {
        if (seen[p] != 0) {
          return {seen[p], k - seen[p]};
        }
        seen[p] = k;
        p       = S(p, x);
      }
    }

    inline std::vector<std::size_t> invariant(FiniteSemigroup const& S,
                                              ElementId              x) {
      auto [index, period] = index_period(S, x);
      std::size_t left_fixed = 0, right_fixed = 0, squares = 0;
      for (ElementId y = 0; y < S.size(); ++y) {
        left_fixed += S(y, x) == x;
        right_fixed += S(x, y) == x;
        squares += S(y, y) == x;
      }
      return {index, period, left_fixed, right_fixed, squares};
    }
  }  // namespace detail

  // A bijection f with f(ab) = f(a)f(b), found by backtracking with forced
  // propagation along products; nullopt when the semigroups are not
  // isomorphic.
  inline std::optional<std::vector<ElementId>>
  find_semigroup_isomorphism(FiniteSemigroup const& S,
                             FiniteSemigroup const& T) {
    auto const n = S.size();
    if (n != T.size()) {
      return std::nullopt;
    }
    std::vector<std::vector<std::size_t>> inv_s(n), inv_t(n);
    for (ElementId x = 0; x < n; ++x) {
      inv_s[x] = detail::invariant(S, x);
      inv_t[x] = detail::invariant(T, x);
    }
    constexpr auto unset = static_cast<ElementId>(-1);
    std::vector<ElementId> f(n, unset), g(n, unset);

    // Assign a -> b and close under products; returns false on conflict.
    auto assign = [&](ElementId a, ElementId b, std::vector<ElementId>& trail) {
      std::vector<std::pair<ElementId, ElementId>> queue{{a, b}};
      while (!queue.empty()) {
        auto [x, y] = queue.back();
        queue.pop_back();
        if (f[x] != unset || g[y] != unset) {
          if (f[x] != y || g[y] != x) {
            return false;
          }
          continue;
        }
        if (inv_s[x] != inv_t[y]) {
          return false;
        }
        f[x] = y;
        g[y] = x;
        trail.push_back(x);
        for (ElementId z = 0; z < n; ++z) {
          if (f[z] == unset) {
            continue;
          }
          queue.emplace_back(S(x, z), T(y, f[z]));
          queue.emplace_back(S(z, x), T(f[z], y));
        }
      }
      return true;
    };

    auto undo = [&](std::vector<ElementId> const& trail) {
      for (auto x : trail) {
        g[f[x]] = unset;
        f[x]    = unset;
      }
    };

    auto search = [&](auto&& self) -> bool {
      ElementId next = unset;
      for (ElementId x = 0; x < n; ++x) {
        if (f[x] == unset) {
          next = x;
          break;
        }
      }
      if (next == unset) {
        return true;
      }
      for (ElementId y = 0; y < n; ++y) {
        if (g[y] != unset || inv_s[next] != inv_t[y]) {
          continue;
        }
        std::vector<ElementId> trail;
        if (assign(next, y, trail) && self(self)) {
          return true;
        }
        undo(trail);
      }
      return false;
    };

    if (!search(search)) {
      return std::nullopt;
    }
    return f;
  }

  // True iff f is a bijection S -> T with f(ab) = f(a)f(b).
  inline bool is_isomorphism(FiniteSemigroup const&        S,
                             FiniteSemigroup const&        T,
                             std::vector<ElementId> const& f) {
    if (S.size() != T.size() || f.size() != S.size()) {
      return false;
    }
    std::vector<char> hit(T.size(), 0);
    for (auto y : f) {
      if (y >= T.size() || hit[y]) {
        return false;
      }
      hit[y] = 1;
    }
    for (ElementId a = 0; a < S.size(); ++a) {
      for (ElementId b = 0; b < S.size(); ++b) {
        if (f[S(a, b)] != T(f[a], f[b])) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace edense

#endif  // EDENSE_SEMIGROUP_HPP_

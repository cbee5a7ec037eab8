#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"
#include "monoid.hpp"

namespace pmon {

  inline constexpr int kFormatVersion = 1;

  // Fast paths, valid in P_n (and in any subsemigroup closed under the key
  // maps, e.g. the Brauer monoid).
  inline bool r_related(Partition const& a, Partition const& b) {
    return dom(a) == dom(b) && ker(a) == ker(b);
  }
  inline bool l_related(Partition const& a, Partition const& b) {
    return codom(a) == codom(b) && coker(a) == coker(b);
  }
  inline bool d_related(Partition const& a, Partition const& b) {
    return rank(a) == rank(b);
  }

  template <FiniteSemigroup S>
  bool r_related(S const& s, typename S::element_type const& a, typename S::element_type const& b) {
    return s.r_key(a) == s.r_key(b);
  }
  template <FiniteSemigroup S>
  bool l_related(S const& s, typename S::element_type const& a, typename S::element_type const& b) {
    return s.l_key(a) == s.l_key(b);
  }

  // Green's relations from principal one-sided ideals of S¹, by exhaustive
  // multiplication.  Quadratic in |S|; meant as an oracle for small S.
  template <FiniteSemigroup S>
  class IdealOracle {
   public:
    using E = typename S::element_type;

    explicit IdealOracle(S const& s) : _elts(s.elements()) {
      int N = static_cast<int>(_elts.size());
      for (int i = 0; i < N; ++i)
        _idx[_elts[i]] = i;
      _right.assign(N, std::vector<bool>(N));
      _left.assign(N, std::vector<bool>(N));
      for (int i = 0; i < N; ++i) {
        _right[i][i] = _left[i][i] = true;
        for (int j = 0; j < N; ++j) {
          _right[i][_idx.at(s.product(_elts[i], _elts[j]))] = true;
          _left[i][_idx.at(s.product(_elts[j], _elts[i]))]  = true;
        }
      }
    }

    bool r_related(E const& a, E const& b) const {
      int i = _idx.at(a), j = _idx.at(b);
      return _right[i][j] && _right[j][i];
    }
    bool l_related(E const& a, E const& b) const {
      int i = _idx.at(a), j = _idx.at(b);
      return _left[i][j] && _left[j][i];
    }
    bool d_related(E const& a, E const& b) const {
      int i = _idx.at(a), j = _idx.at(b);
      for (int c = 0; c < static_cast<int>(_elts.size()); ++c)
        if (_right[i][c] && _right[c][i] && _left[c][j] && _left[j][c])
          return true;
      return false;
    }
    std::vector<E> const& elements() const {
      return _elts;
    }

   private:
    std::vector<E>                    _elts;
    std::unordered_map<E, int>        _idx;
    std::vector<std::vector<bool>>    _right, _left;
  };

  // A regular D-class.  Rows and columns index the R- and L-classes by their
  // canonical keys; for *-semigroups these are the projections, so that
  // rows == cols == projections.
  template <FiniteSemigroup S>
  struct DClassData {
    using E = typename S::element_type;

    S              semigroup;
    int            rank = 0;
    std::vector<E> elements;
    std::vector<E> rows, cols;
    std::vector<E> projections;   // empty without an involution
    std::vector<E> idempotents;   // sorted
    std::vector<int> idem_row, idem_col;
    // group_h[i][j] is the identity of R_i ∩ L_j when that H-class is a group
    std::vector<std::vector<int>> group_h;
    // strata (NTu, NTd) -> idempotent indices, partition handles only
    std::map<std::pair<int, int>, std::vector<int>> strata;

    std::unordered_map<E, int> row_index, col_index, idem_index, proj_index;

    int num_rows() const {
      return static_cast<int>(rows.size());
    }
    int num_cols() const {
      return static_cast<int>(cols.size());
    }
    int row_of(E const& a) const {
      return row_index.at(semigroup.r_key(a));
    }
    int col_of(E const& a) const {
      return col_index.at(semigroup.l_key(a));
    }
    bool contains(E const& a) const {
      return row_index.count(semigroup.r_key(a)) && semigroup.rank_of(a) == rank
             && col_index.count(semigroup.l_key(a));
    }
    std::optional<int> idempotent_index(E const& a) const {
      auto it = idem_index.find(a);
      if (it == idem_index.end())
        return std::nullopt;
      return it->second;
    }
    int projection_index(E const& p) const {
      auto it = proj_index.find(p);
      if (it == proj_index.end())
        throw Error("not a projection of this D-class: " + semigroup.format(p));
      return it->second;
    }
    bool friendly(int p, int q) const {
      return group_h[p][q] >= 0;
    }
    E product(E const& a, E const& b) const {
      return semigroup.product(a, b);
    }
  };

  namespace detail {
    template <FiniteSemigroup S>
    void index_idempotents(DClassData<S>& d) {
      d.idem_index.clear();
      d.idem_row.clear();
      d.idem_col.clear();
      d.group_h.assign(d.rows.size(), std::vector<int>(d.cols.size(), -1));
      for (size_t k = 0; k < d.idempotents.size(); ++k) {
        auto const& e = d.idempotents[k];
        d.idem_index[e] = static_cast<int>(k);
        int i           = d.row_of(e);
        int j           = d.col_of(e);
        d.idem_row.push_back(i);
        d.idem_col.push_back(j);
        if (d.group_h[i][j] != -1)
          throw Error("two idempotents in one H-class");
        d.group_h[i][j] = static_cast<int>(k);
      }
      d.strata.clear();
      if constexpr (std::is_same_v<typename S::element_type, Partition>) {
        for (size_t k = 0; k < d.idempotents.size(); ++k)
          d.strata[{ntu(d.idempotents[k]), ntd(d.idempotents[k])}].push_back(static_cast<int>(k));
      }
    }

    template <FiniteSemigroup S>
    void verify_dclass(DClassData<S> const& d) {
      auto const& s = d.semigroup;
      for (auto const* v : {&d.projections, &d.idempotents})
        for (auto const& x : *v)
          if (s.rank_of(x) != d.rank)
            throw Error("element " + s.format(x) + " is not of rank " + std::to_string(d.rank));
      size_t idem = std::count_if(d.elements.begin(), d.elements.end(),
                                  [&](auto const& x) { return s.product(x, x) == x; });
      if (idem != d.idempotents.size())
        throw Error("idempotent list is incomplete");
      if constexpr (S::has_star) {
        auto const& P = d.projections;
        for (size_t p = 0; p < P.size(); ++p)
          for (size_t q = 0; q < P.size(); ++q) {
            auto pq     = d.product(P[p], P[q]);
            bool fr     = d.product(pq, P[p]) == P[p]
                      && d.product(d.product(P[q], P[p]), P[q]) == P[q];
            int  h      = d.group_h[p][q];
            if (fr != (h >= 0) || (fr && d.idempotents[h] != pq))
              throw Error("friendliness does not match group H-classes");
          }
      }
    }
  }  // namespace detail

  template <FiniteSemigroup S>
  DClassData<S> dclass_data(S const& s, int r) {
    using E = typename S::element_type;
    DClassData<S> d{s};
    d.rank = r;
    std::vector<E> all = s.elements();
    std::vector<E> rowk, colk;
    for (auto const& x : all)
      if (s.rank_of(x) == r) {
        d.elements.push_back(x);
        rowk.push_back(s.r_key(x));
        colk.push_back(s.l_key(x));
        if (s.product(x, x) == x)
          d.idempotents.push_back(x);
      }
    if (d.elements.empty())
      throw Error("empty D-class: rank " + std::to_string(r) + " in " + s.name());
    std::sort(rowk.begin(), rowk.end());
    rowk.erase(std::unique(rowk.begin(), rowk.end()), rowk.end());
    std::sort(colk.begin(), colk.end());
    colk.erase(std::unique(colk.begin(), colk.end()), colk.end());
    d.rows = rowk;
    d.cols = colk;
    for (size_t i = 0; i < d.rows.size(); ++i)
      d.row_index[d.rows[i]] = static_cast<int>(i);
    for (size_t j = 0; j < d.cols.size(); ++j)
      d.col_index[d.cols[j]] = static_cast<int>(j);
    if constexpr (S::has_star) {
      if (d.rows != d.cols)
        throw Error("R- and L-class keys disagree; not a regular *-class");
      d.projections = d.rows;
      for (size_t i = 0; i < d.projections.size(); ++i)
        d.proj_index[d.projections[i]] = static_cast<int>(i);
      for (auto const& p : d.projections)
        if (s.star(p) != p || s.product(p, p) != p)
          throw Error("class key " + s.format(p) + " is not a projection");
    }
    std::sort(d.idempotents.begin(), d.idempotents.end());
    detail::index_idempotents(d);
    for (int i = 0; i < d.num_rows(); ++i) {
      bool any = false;
      for (int j = 0; j < d.num_cols(); ++j)
        any = any || d.group_h[i][j] >= 0;
      if (!any)
        throw Error("D-class is not regular");
    }
    detail::verify_dclass(d);
    return d;
  }

  // pq when (p,q) is friendly
  template <FiniteSemigroup S>
  std::optional<typename S::element_type> h_class_idempotent(DClassData<S> const& d,
                                                             typename S::element_type const& p,
                                                             typename S::element_type const& q) {
    int i = d.projection_index(p), j = d.projection_index(q);
    if (d.group_h[i][j] < 0)
      return std::nullopt;
    return d.idempotents[d.group_h[i][j]];
  }

  template <FiniteSemigroup S>
  std::vector<typename S::element_type> sandwich_set(S const& s,
                                                     std::vector<typename S::element_type> const& E_S,
                                                     typename S::element_type const& e,
                                                     typename S::element_type const& f) {
    if (s.product(e, e) != e || s.product(f, f) != f)
      throw Error("sandwich set of a non-idempotent");
    auto                                  ef = s.product(e, f);
    std::vector<typename S::element_type> out;
    for (auto const& h : E_S)
      if (s.product(s.product(e, h), f) == ef && s.product(s.product(f, h), e) == h)
        out.push_back(h);
    return out;
  }

  template <FiniteSemigroup S>
  std::vector<typename S::element_type> sandwich_set(S const& s,
                                                     typename S::element_type const& e,
                                                     typename S::element_type const& f) {
    return sandwich_set(s, idempotents(s), e, f);
  }

  template <FiniteSemigroup S>
  nlohmann::json to_json(DClassData<S> const& d) {
    nlohmann::json j;
    j["format"]  = "pmon.dclass";
    j["version"] = kFormatVersion;
    j["monoid"]  = d.semigroup.name();
    j["rank"]    = d.rank;
    j["size"]    = d.elements.size();
    auto texts   = [&](std::vector<typename S::element_type> const& v) {
      nlohmann::json a = nlohmann::json::array();
      for (auto const& x : v)
        a.push_back(d.semigroup.format(x));
      return a;
    };
    j["rows"]        = texts(d.rows);
    j["cols"]        = texts(d.cols);
    j["projections"] = texts(d.projections);
    j["idempotents"] = texts(d.idempotents);
    nlohmann::json fr = nlohmann::json::array();
    if constexpr (S::has_star)
      for (int p = 0; p < d.num_rows(); ++p)
        for (int q = 0; q < d.num_cols(); ++q)
          if (d.group_h[p][q] >= 0)
            fr.push_back({p, q});
    j["friendly"] = fr;
    nlohmann::json st = nlohmann::json::array();
    for (auto const& [kl, v] : d.strata)
      st.push_back({{"ntu", kl.first}, {"ntd", kl.second}, {"idempotents", v}});
    j["strata"] = st;
    return j;
  }

  // Rebuilds from a document produced by to_json.  The element list of the
  // class is recomputed; everything indexed is taken from the document and
  // re-verified.
  template <FiniteSemigroup S>
  DClassData<S> dclass_from_json(S const& s, nlohmann::json const& j) {
    if (j.value("format", "") != "pmon.dclass" || j.value("version", 0) != kFormatVersion)
      throw Error("unsupported D-class document");
    if (j.at("monoid").get<std::string>() != s.name())
      throw Error("D-class document is for " + j.at("monoid").get<std::string>()
                  + ", not " + s.name());
    using E = typename S::element_type;
    DClassData<S> d{s};
    d.rank = j.at("rank").get<int>();
    for (auto const& x : s.elements())
      if (s.rank_of(x) == d.rank)
        d.elements.push_back(x);
    auto parse = [&](nlohmann::json const& a) {
      std::vector<E> v;
      for (auto const& t : a)
        v.push_back(s.parse(t.get<std::string>()));
      return v;
    };
    d.rows        = parse(j.at("rows"));
    d.cols        = parse(j.at("cols"));
    d.projections = parse(j.at("projections"));
    d.idempotents = parse(j.at("idempotents"));
    for (size_t i = 0; i < d.rows.size(); ++i)
      d.row_index[d.rows[i]] = static_cast<int>(i);
    for (size_t i = 0; i < d.cols.size(); ++i)
      d.col_index[d.cols[i]] = static_cast<int>(i);
    for (size_t i = 0; i < d.projections.size(); ++i)
      d.proj_index[d.projections[i]] = static_cast<int>(i);
    detail::index_idempotents(d);
    detail::verify_dclass(d);
    return d;
  }

}  // namespace pmon

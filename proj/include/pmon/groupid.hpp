#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"
#include "perm.hpp"
#include "present.hpp"

namespace pmon {

  using BigInt = boost::multiprecision::cpp_int;

  // ---------------------------------------------------------------------
  // Abelian invariants

  // Invariant factors d_1 | d_2 | ... of a dense integer matrix, zeros omitted.
  inline std::vector<BigInt> smith_invariants(std::vector<std::vector<BigInt>> a) {
    std::vector<BigInt> out;
    size_t const        m = a.size();
    size_t const        k = m ? a[0].size() : 0;
    for (size_t t = 0; t < std::min(m, k); ++t) {
      while (true) {
        // smallest nonzero entry of the lower-right block into (t, t)
        size_t bi = m, bj = k;
        for (size_t i = t; i < m; ++i)
          for (size_t j = t; j < k; ++j)
            if (a[i][j] != 0 && (bi == m || abs(a[i][j]) < abs(a[bi][bj])))
              bi = i, bj = j;
        if (bi == m)
          return out;
        std::swap(a[t], a[bi]);
        for (size_t i = 0; i < m; ++i)
          std::swap(a[i][t], a[i][bj]);
        bool clean = true;
        for (size_t i = t + 1; i < m; ++i)
          if (a[i][t] != 0) {
            BigInt q = a[i][t] / a[t][t];
            for (size_t j = t; j < k; ++j)
              a[i][j] -= q * a[t][j];
            clean = clean && a[i][t] == 0;
          }
        for (size_t j = t + 1; j < k; ++j)
          if (a[t][j] != 0) {
            BigInt q = a[t][j] / a[t][t];
            for (size_t i = t; i < m; ++i)
              a[i][j] -= q * a[i][t];
            clean = clean && a[t][j] == 0;
          }
        if (!clean)
          continue;
        // divisibility of the remaining block
        size_t bad = m;
        for (size_t i = t + 1; i < m && bad == m; ++i)
          for (size_t j = t + 1; j < k; ++j)
            if (a[i][j] % a[t][t] != 0) {
              bad = i;
              break;
            }
        if (bad == m)
          break;
        for (size_t j = t; j < k; ++j)
          a[t][j] += a[bad][j];
      }
      out.push_back(abs(a[t][t]));
    }
    return out;
  }

  struct AbelianInvariants {
    int                 free_rank = 0;
    std::vector<BigInt> torsion;  // invariant factors > 1, increasing

    bool operator==(AbelianInvariants const&) const = default;

    std::string to_string() const {
      std::vector<std::string> parts;
      if (free_rank == 1)
        parts.push_back("Z");
      else if (free_rank > 1)
        parts.push_back("Z^" + std::to_string(free_rank));
      for (auto const& t : torsion)
        parts.push_back("Z_" + t.str());
      if (parts.empty())
        return "1";
      std::string s = parts[0];
      for (size_t k = 1; k < parts.size(); ++k)
        s += " x " + parts[k];
      return s;
    }
  };

  // Exponent-sum matrix reduced on unit pivots in sparse form, then the
  // remainder by dense Smith normal form.
  inline AbelianInvariants abelianization(GroupPresentation const& p) {
    int const                         G = p.num_generators();
    std::vector<std::map<int, BigInt>> rows;
    for (auto const& w : p.relators) {
      std::map<int, BigInt> r;
      for (int l : w)
        r[gen_of(l)] += l > 0 ? 1 : -1;
      std::erase_if(r, [](auto const& kv) { return kv.second == 0; });
      if (!r.empty())
        rows.push_back(std::move(r));
    }
    std::vector<std::set<int>> col_rows(G);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i)
      for (auto const& [c, v] : rows[i])
        col_rows[c].insert(i);
    std::vector<bool> row_dead(rows.size(), false), col_dead(G, false);
    int               unit_pivots = 0;
    bool              progress    = true;
    while (progress) {
      progress = false;
      for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
        if (row_dead[r])
          continue;
        int c = -1;
        // pivot on the unit entry whose column is sparsest
        for (auto const& [cc, v] : rows[r])
          if (abs(v) == 1 && (c < 0 || col_rows[cc].size() < col_rows[c].size()))
            c = cc;
        if (c < 0)
          continue;
        BigInt pv = rows[r].at(c);
        for (int r2 : std::vector<int>(col_rows[c].begin(), col_rows[c].end())) {
          if (r2 == r)
            continue;
          BigInt f = rows[r2].at(c) * pv;
          for (auto const& [cc, v] : rows[r]) {
            auto& x = rows[r2][cc];
            x -= f * v;
            if (x == 0) {
              rows[r2].erase(cc);
              col_rows[cc].erase(r2);
            } else {
              col_rows[cc].insert(r2);
            }
          }
        }
        for (auto const& [cc, v] : rows[r])
          col_rows[cc].erase(r);
        row_dead[r] = true;
        col_dead[c] = true;
        ++unit_pivots;
        progress = true;
      }
    }
    std::vector<int> cols;
    for (int c = 0; c < G; ++c)
      if (!col_dead[c])
        cols.push_back(c);
    std::vector<std::vector<BigInt>> dense;
    for (size_t r = 0; r < rows.size(); ++r)
      if (!row_dead[r] && !rows[r].empty()) {
        std::vector<BigInt> v(cols.size());
        for (size_t j = 0; j < cols.size(); ++j) {
          auto it = rows[r].find(cols[j]);
          if (it != rows[r].end())
            v[j] = it->second;
        }
        dense.push_back(std::move(v));
      }
    auto              inv = smith_invariants(std::move(dense));
    AbelianInvariants res;
    int               rank = unit_pivots + static_cast<int>(inv.size());
    res.free_rank          = G - rank;
    for (auto const& d : inv)
      if (d > 1)
        res.torsion.push_back(d);
    std::sort(res.torsion.begin(), res.torsion.end());
    return res;
  }

  // ---------------------------------------------------------------------
  // Coset enumeration over the trivial subgroup, HLT strategy

  struct CosetResult {
    bool   complete = false;
    size_t index    = 0;  // number of live cosets when complete
    size_t defined  = 0;  // cosets ever defined
    size_t limit    = 0;
  };

  class ToddCoxeter {
   public:
    ToddCoxeter(GroupPresentation const& p, size_t max_cosets)
        : _cols(2 * p.num_generators()), _rels(p.relators) {
      // keep the table under ~256MB whatever the cap
      size_t const cell_cap = size_t(1) << 26;
      _limit                = _cols ? std::min(max_cosets, cell_cap / _cols) : max_cosets;
      _limit                = std::max<size_t>(_limit, 1);
    }

    CosetResult run() {
      CosetResult res;
      res.limit = _limit;
      new_coset();
      for (size_t c = 0; c < _rep.size() && !_overflow; ++c) {
        for (auto const& w : _rels) {
          if (_rep[c] != static_cast<int>(c) || _overflow)
            break;
          scan_and_fill(static_cast<int>(c), w);
        }
        for (int x = 0; x < _cols && !_overflow; ++x)
          if (_rep[c] == static_cast<int>(c) && at(c, x) < 0)
            define(static_cast<int>(c), x);
      }
      res.defined = _rep.size();
      if (_overflow)
        return res;
      res.complete = true;
      for (size_t c = 0; c < _rep.size(); ++c)
        res.index += _rep[c] == static_cast<int>(c);
      return res;
    }

   private:
    static int col(int l) {
      return l > 0 ? 2 * (l - 1) : 2 * (-l - 1) + 1;
    }
    int& at(size_t c, int x) {
      return _table[c * _cols + x];
    }
    int new_coset() {
      if (_rep.size() >= _limit) {
        _overflow = true;
        return -1;
      }
      _rep.push_back(static_cast<int>(_rep.size()));
      _table.resize(_table.size() + _cols, -1);
      return static_cast<int>(_rep.size()) - 1;
    }
    void define(int c, int x) {
      int d = new_coset();
      if (d < 0)
        return;
      at(c, x)     = d;
      at(d, x ^ 1) = c;
    }
    int rep(int k) {
      int r = k;
      while (_rep[r] != r)
        r = _rep[r];
      while (_rep[k] != r) {
        int n   = _rep[k];
        _rep[k] = r;
        k       = n;
      }
      return r;
    }
    void merge(int a, int b) {
      a = rep(a), b = rep(b);
      if (a == b)
        return;
      int mu = std::min(a, b), nu = std::max(a, b);
      _rep[nu] = mu;
      _queue.push_back(nu);
    }
    void coincidence(int a, int b) {
      _queue.clear();
      merge(a, b);
      for (size_t i = 0; i < _queue.size(); ++i) {
        int g = _queue[i];
        for (int x = 0; x < _cols; ++x) {
          int d = at(g, x);
          if (d < 0)
            continue;
          at(d, x ^ 1) = -1;
          int mu = rep(g), nu = rep(d);
          if (at(mu, x) >= 0)
            merge(nu, at(mu, x));
          else if (at(nu, x ^ 1) >= 0)
            merge(mu, at(nu, x ^ 1));
          else {
            at(mu, x)      = nu;
            at(nu, x ^ 1)  = mu;
          }
        }
      }
    }
    void scan_and_fill(int c, Word const& w) {
      int f = c, b = c;
      int i = 0, j = static_cast<int>(w.size()) - 1;
      while (true) {
        while (i <= j && at(f, col(w[i])) >= 0)
          f = at(f, col(w[i++]));
        if (i > j) {
          if (f != b)
            coincidence(f, b);
          return;
        }
        while (j >= i && at(b, col(w[j]) ^ 1) >= 0)
          b = at(b, col(w[j--]) ^ 1);
        if (j < i) {
          coincidence(f, b);
          return;
        }
        if (i == j) {
          at(f, col(w[i]))     = b;
          at(b, col(w[i]) ^ 1) = f;
          return;
        }
        define(f, col(w[i]));
        if (_overflow)
          return;
      }
    }

    int               _cols;
    std::vector<Word> _rels;
    size_t            _limit    = 0;
    bool              _overflow = false;
    std::vector<int>  _table, _rep, _queue;
  };

  inline CosetResult todd_coxeter(GroupPresentation const& p, size_t max_cosets = 1'000'000) {
    return ToddCoxeter(p, max_cosets).run();
  }

  // ---------------------------------------------------------------------
  // Permutation labels as a homomorphism check

  struct LabelCheck {
    bool   valid        = false;
    int    failing      = -1;  // first relator not sent to the identity
    size_t image_order  = 0;
  };

  inline LabelCheck check_label_homomorphism(GroupPresentation const& p, std::vector<Perm> const& labels,
                                             int r) {
    if (static_cast<int>(labels.size()) != p.num_generators())
      throw Error("label count does not match the generators");
    LabelCheck res;
    res.valid = true;
    for (size_t k = 0; k < p.relators.size() && res.valid; ++k) {
      Perm x = Perm::identity(r);
      for (int l : p.relators[k])
        x = x * (l > 0 ? labels[gen_of(l)] : labels[gen_of(l)].inverse());
      if (!x.is_identity()) {
        res.valid   = false;
        res.failing = static_cast<int>(k);
      }
    }
    res.image_order = generated_order(labels, r);
    return res;
  }

  inline size_t factorial(int r) {
    size_t f = 1;
    for (int k = 2; k <= r; ++k)
      f *= k;
    return f;
  }

  // ---------------------------------------------------------------------
  // Verdicts

  struct Verdict {
    enum class Kind { Free, Finite, ZCrossFinite, Unknown };
    Kind                     kind    = Kind::Unknown;
    size_t                   value   = 0;  // free rank or order
    bool                     partial = false;
    std::string              group;        // e.g. "Z", "S_3", "Z x S_2"
    AbelianInvariants        abelian;
    std::vector<std::string> evidence;

    // the trivial group counts as free of rank 0
    bool is_free_of_rank(size_t k) const {
      return (kind == Kind::Free && value == k) || (k == 0 && kind == Kind::Finite && value == 1);
    }
    bool is_finite_of_order(size_t n) const {
      return (kind == Kind::Finite && value == n) || (n == 1 && kind == Kind::Free && value == 0);
    }

    std::string to_string() const {
      switch (kind) {
        case Kind::Free:
          return "FREE(" + std::to_string(value) + ")";
        case Kind::Finite:
          return "FINITE(" + std::to_string(value) + ")";
        case Kind::ZCrossFinite:
          return "Z_CROSS_FINITE(" + std::to_string(value) + (partial ? ", partial)" : ")");
        default:
          return "UNKNOWN";
      }
    }
  };

  struct IdentifyHints {
    int               rank = -1;        // expected S_rank when labels are given
    std::vector<Perm> labels;           // one per generator of the input
    std::vector<int>  kill_generators;  // generators set to 1 for the quotient test
    size_t            max_cosets    = 1'000'000;
    size_t            tietze_budget = size_t(1) << 30;
  };

  inline std::string free_group_name(size_t k) {
    if (k == 0)
      return "1";
    return k == 1 ? "Z" : "F_" + std::to_string(k);
  }

  inline Verdict identify(GroupPresentation const& p, IdentifyHints const& hints = {}) {
    Verdict v;
    auto    ts = tietze_simplify(p, hints.tietze_budget);
    auto&   q  = ts.presentation;
    v.evidence.push_back("tietze: " + std::to_string(p.num_generators()) + " generators, "
                         + std::to_string(p.relators.size()) + " relators -> "
                         + std::to_string(q.num_generators()) + " generators, "
                         + std::to_string(q.relators.size()) + " relators"
                         + (ts.budget_exhausted ? " (budget exhausted)" : ""));
    v.abelian = abelianization(q);
    v.evidence.push_back("abelianization: " + v.abelian.to_string());

    std::optional<LabelCheck> lc;
    if (!hints.labels.empty() && hints.rank >= 0) {
      lc = check_label_homomorphism(p, hints.labels, std::max(hints.rank, 1));
      v.evidence.push_back(std::string("label homomorphism: ") + (lc->valid ? "valid" : "invalid")
                           + ", image order " + std::to_string(lc->image_order));
    }
    auto finite_name = [&](size_t n) -> std::string {
      if (n == 1)
        return "1";
      if (lc && lc->valid && lc->image_order == n && hints.rank >= 0 && n == factorial(hints.rank))
        return "S_" + std::to_string(hints.rank);
      return "order " + std::to_string(n);
    };

    if (q.num_generators() == 0) {
      v.kind  = Verdict::Kind::Finite;
      v.value = 1;
      v.group = "1";
      return v;
    }
    if (q.relators.empty()) {
      v.kind  = Verdict::Kind::Free;
      v.value = q.num_generators();
      v.group = free_group_name(v.value);
      return v;
    }
    if (v.abelian.free_rank == 0) {
      auto tc = todd_coxeter(q, hints.max_cosets);
      v.evidence.push_back("coset enumeration: "
                           + (tc.complete ? "index " + std::to_string(tc.index)
                                          : "incomplete after " + std::to_string(tc.defined) + " cosets"));
      if (tc.complete) {
        v.kind  = Verdict::Kind::Finite;
        v.value = tc.index;
        v.group = finite_name(tc.index);
        return v;
      }
    }
    if (v.abelian.free_rank == 1 && !hints.kill_generators.empty()) {
      GroupPresentation k = p;
      for (int g : hints.kill_generators)
        k.add_relator({letter(g)});
      auto kq = tietze_simplify(k, hints.tietze_budget).presentation;
      auto ka = abelianization(kq);
      auto tc = todd_coxeter(kq, hints.max_cosets);
      v.evidence.push_back("quotient: abelianization " + ka.to_string() + ", coset enumeration "
                           + (tc.complete ? "index " + std::to_string(tc.index) : "incomplete"));
      AbelianInvariants expect = ka;
      expect.free_rank += 1;
      bool labels_ok = !lc || (lc->valid && lc->image_order == tc.index);
      if (tc.complete && ka.free_rank == 0 && expect == v.abelian && labels_ok) {
        v.kind    = Verdict::Kind::ZCrossFinite;
        v.value   = tc.index;
        v.partial = true;
        v.group   = "Z x " + finite_name(tc.index);
        return v;
      }
    }
    v.kind = Verdict::Kind::Unknown;
    return v;
  }

  inline nlohmann::json to_json(Verdict const& v) {
    nlohmann::json tors = nlohmann::json::array();
    for (auto const& t : v.abelian.torsion)
      tors.push_back(t.str());
    return {{"format", "pmon.verdict"},
            {"version", kFormatVersion},
            {"verdict", v.to_string()},
            {"group", v.group},
            {"abelianization", {{"free_rank", v.abelian.free_rank}, {"torsion", tors}}},
            {"evidence", v.evidence}};
  }

}  // namespace pmon

#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <thread>
#include <tuple>
#include <vector>

#include "green.hpp"
#include "perm.hpp"

namespace pmon {

  enum class Orientation { LR, RL, UD, DU };

  inline char const* orientation_name(Orientation o) {
    switch (o) {
      case Orientation::LR: return "LR";
      case Orientation::RL: return "RL";
      case Orientation::UD: return "UD";
      case Orientation::DU: return "DU";
    }
    return "?";
  }

  inline bool is_horizontal(Orientation o) {
    return o == Orientation::LR || o == Orientation::RL;
  }

  // (e f; g h) with e R f, g R h, e L g, f L h
  template <typename E>
  struct Square {
    E e, f, g, h;
    bool degenerate() const {
      return e == f || e == g;
    }
    bool operator==(Square const&) const = default;
  };

  template <typename E>
  struct SingularWitness {
    Square<E>   square;
    Orientation orientation;
    E           u;
  };

  template <FiniteSemigroup S>
  bool is_square(S const& s, Square<typename S::element_type> const& q) {
    return r_related(s, q.e, q.f) && r_related(s, q.g, q.h) && l_related(s, q.e, q.g)
           && l_related(s, q.f, q.h);
  }

  template <FiniteSemigroup S>
  bool is_lr_singular(S const& s, Square<typename S::element_type> const& q,
                      typename S::element_type const& u) {
    return s.product(u, q.e) == q.e && s.product(u, q.g) == q.g && s.product(q.e, u) == q.f
           && s.product(q.g, u) == q.h;
  }

  // (e f; g h) is RL-singular when (f e; h g) is LR-singular
  template <FiniteSemigroup S>
  bool is_rl_singular(S const& s, Square<typename S::element_type> const& q,
                      typename S::element_type const& u) {
    return is_lr_singular(s, Square<typename S::element_type>{q.f, q.e, q.h, q.g}, u);
  }

  template <FiniteSemigroup S>
  bool is_ud_singular(S const& s, Square<typename S::element_type> const& q,
                      typename S::element_type const& u) {
    return s.product(q.e, u) == q.e && s.product(q.f, u) == q.f && s.product(u, q.e) == q.g
           && s.product(u, q.f) == q.h;
  }

  // (e f; g h) is DU-singular when (g h; e f) is UD-singular
  template <FiniteSemigroup S>
  bool is_du_singular(S const& s, Square<typename S::element_type> const& q,
                      typename S::element_type const& u) {
    return is_ud_singular(s, Square<typename S::element_type>{q.g, q.h, q.e, q.f}, u);
  }

  template <FiniteSemigroup S>
  bool is_singular_as(S const& s, Square<typename S::element_type> const& q,
                      typename S::element_type const& u, Orientation o) {
    switch (o) {
      case Orientation::LR: return is_lr_singular(s, q, u);
      case Orientation::RL: return is_rl_singular(s, q, u);
      case Orientation::UD: return is_ud_singular(s, q, u);
      case Orientation::DU: return is_du_singular(s, q, u);
    }
    return false;
  }

  template <FiniteSemigroup S>
  bool is_rectangular_band(S const& s, Square<typename S::element_type> const& q) {
    typename S::element_type const m[2][2] = {{q.e, q.f}, {q.g, q.h}};
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        if (s.product(m[a / 2][a % 2], m[b / 2][b % 2]) != m[a / 2][b % 2])
          return false;
    return true;
  }

  // Idempotents of s listed by increasing NTu+NTd (partition handles) and then
  // canonically; the order in which singularizers are tried.
  template <FiniteSemigroup S>
  std::vector<typename S::element_type> witness_order(S const& s) {
    auto U = idempotents(s);
    if constexpr (std::is_same_v<typename S::element_type, Partition>)
      std::stable_sort(U.begin(), U.end(), [](Partition const& x, Partition const& y) {
        return ntu(x) + ntd(x) < ntu(y) + ntd(y);
      });
    return U;
  }

  template <FiniteSemigroup S>
  std::vector<SingularWitness<typename S::element_type>>
  find_singularizers(S const& s, std::vector<typename S::element_type> const& U,
                     Square<typename S::element_type> const& q) {
    using E = typename S::element_type;
    std::vector<SingularWitness<E>> out;
    auto two_sided = [&](E const& u, E const& x) {
      return s.product(u, x) == x && s.product(x, u) == x;
    };
    for (auto const& u : U) {
      // f, h ≤ u for LR; e, g ≤ u for RL; g, h ≤ u for UD; e, f ≤ u for DU
      if (two_sided(u, q.f) && two_sided(u, q.h) && is_lr_singular(s, q, u))
        out.push_back({q, Orientation::LR, u});
      if (two_sided(u, q.e) && two_sided(u, q.g) && is_rl_singular(s, q, u))
        out.push_back({q, Orientation::RL, u});
      if (two_sided(u, q.g) && two_sided(u, q.h) && is_ud_singular(s, q, u))
        out.push_back({q, Orientation::UD, u});
      if (two_sided(u, q.e) && two_sided(u, q.f) && is_du_singular(s, q, u))
        out.push_back({q, Orientation::DU, u});
    }
    return out;
  }

  template <FiniteSemigroup S>
  std::vector<SingularWitness<typename S::element_type>>
  find_singularizers(S const& s, Square<typename S::element_type> const& q) {
    return find_singularizers(s, witness_order(s), q);
  }

  // A singular square of a D-class, stored in its canonical arrangement: rows
  // r0 < r1 and columns c0 < c1, corners given as idempotent indices.
  struct SquareEntry {
    int         r0, r1, c0, c1;
    bool        vertical;
    int         e, f, g, h;
    Orientation orientation;  // relative to the canonical arrangement
    int         u;            // index of the kept witness in the witness list
    auto key() const {
      return std::tuple(r0, r1, c0, c1, vertical);
    }
  };

  template <FiniteSemigroup S>
  struct SquareSet {
    using E = typename S::element_type;
    std::vector<E>           witnesses;  // ambient idempotents, in witness_order
    std::vector<SquareEntry> squares;    // sorted by key

    Square<E> square(DClassData<S> const& d, SquareEntry const& q) const {
      return {d.idempotents[q.e], d.idempotents[q.f], d.idempotents[q.g], d.idempotents[q.h]};
    }
  };

  namespace detail {
    template <FiniteSemigroup S>
    void scan_witnesses(DClassData<S> const& d, std::vector<typename S::element_type> const& U,
                        int begin, int end, std::map<std::tuple<int, int, int, int, bool>, SquareEntry>& out) {
      int const nE = static_cast<int>(d.idempotents.size());
      auto add = [&](SquareEntry q) {
        auto [it, fresh] = out.emplace(q.key(), q);
        if (!fresh && q.u < it->second.u)
          it->second = q;
      };
      std::vector<std::vector<std::pair<int, int>>> by_col(d.num_cols()), by_row(d.num_rows());
      for (int ui = begin; ui < end; ++ui) {
        auto const& u = U[ui];
        for (auto& v : by_col)
          v.clear();
        for (auto& v : by_row)
          v.clear();
        for (int k = 0; k < nE; ++k) {
          auto const& e  = d.idempotents[k];
          auto        ue = d.product(u, e);
          auto        eu = d.product(e, u);
          if (ue == e && eu != e) {
            if (auto f = d.idempotent_index(eu))
              by_col[d.idem_col[k]].push_back({k, *f});
          }
          if (eu == e && ue != e) {
            if (auto g = d.idempotent_index(ue))
              by_row[d.idem_row[k]].push_back({k, *g});
          }
        }
        // LR: ue=e, ug=g, eu=f, gu=h with e L g
        for (auto const& col : by_col)
          for (size_t a = 0; a < col.size(); ++a)
            for (size_t b = a + 1; b < col.size(); ++b) {
              auto [e, f] = col[a];
              auto [g, h] = col[b];
              if (d.idem_row[e] > d.idem_row[g]) {
                std::swap(e, g);
                std::swap(f, h);
              }
              SquareEntry q;
              q.r0       = d.idem_row[e];
              q.r1       = d.idem_row[g];
              q.vertical = false;
              q.u        = ui;
              if (d.idem_col[e] < d.idem_col[f]) {
                q.c0 = d.idem_col[e], q.c1 = d.idem_col[f];
                q.e = e, q.f = f, q.g = g, q.h = h;
                q.orientation = Orientation::LR;
              } else {
                q.c0 = d.idem_col[f], q.c1 = d.idem_col[e];
                q.e = f, q.f = e, q.g = h, q.h = g;
                q.orientation = Orientation::RL;
              }
              add(q);
            }
        // UD: eu=e, fu=f, ue=g, uf=h with e R f
        for (auto const& row : by_row)
          for (size_t a = 0; a < row.size(); ++a)
            for (size_t b = a + 1; b < row.size(); ++b) {
              auto [e, g] = row[a];
              auto [f, h] = row[b];
              if (d.idem_col[e] > d.idem_col[f]) {
                std::swap(e, f);
                std::swap(g, h);
              }
              SquareEntry q;
              q.c0       = d.idem_col[e];
              q.c1       = d.idem_col[f];
              q.vertical = true;
              q.u        = ui;
              if (d.idem_row[e] < d.idem_row[g]) {
                q.r0 = d.idem_row[e], q.r1 = d.idem_row[g];
                q.e = e, q.f = f, q.g = g, q.h = h;
                q.orientation = Orientation::UD;
              } else {
                q.r0 = d.idem_row[g], q.r1 = d.idem_row[e];
                q.e = g, q.f = h, q.g = e, q.h = f;
                q.orientation = Orientation::DU;
              }
              add(q);
            }
      }
    }
  }  // namespace detail

  // All non-degenerate singular squares of d, one per {rows, columns,
  // horizontal/vertical}.  A square is found from each idempotent u by
  // pairing the idempotents e with ue = e, eu ∈ E_D \ {e} inside a column
  // (and dually inside a row).
  template <FiniteSemigroup S>
  SquareSet<S> enumerate_singular_squares(DClassData<S> const& d,
                                          std::vector<typename S::element_type> U,
                                          int threads = 1) {
    SquareSet<S> out;
    out.witnesses = std::move(U);
    int const N   = static_cast<int>(out.witnesses.size());
    threads       = std::max(1, std::min(threads, N));
    std::vector<std::map<std::tuple<int, int, int, int, bool>, SquareEntry>> parts(threads);
    if (threads == 1) {
      detail::scan_witnesses(d, out.witnesses, 0, N, parts[0]);
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
          detail::scan_witnesses(d, out.witnesses, N * t / threads, N * (t + 1) / threads, parts[t]);
        });
      for (auto& th : pool)
        th.join();
    }
    auto& merged = parts[0];
    for (int t = 1; t < threads; ++t)
      for (auto const& [k, q] : parts[t]) {
        auto [it, fresh] = merged.emplace(k, q);
        if (!fresh && q.u < it->second.u)
          it->second = q;
      }
    for (auto const& [k, q] : merged)
      out.squares.push_back(q);
    return out;
  }

  template <FiniteSemigroup S>
  SquareSet<S> enumerate_singular_squares(DClassData<S> const& d, int threads = 1) {
    return enumerate_singular_squares(d, witness_order(d.semigroup), threads);
  }

  template <FiniteSemigroup S>
  nlohmann::json to_json(DClassData<S> const& d, SquareSet<S> const& ss) {
    nlohmann::json a = nlohmann::json::array();
    for (auto const& q : ss.squares) {
      auto const& s = d.semigroup;
      a.push_back({{"rows", {q.r0, q.r1}},
                   {"cols", {q.c0, q.c1}},
                   {"class", q.vertical ? "vertical" : "horizontal"},
                   {"e", s.format(d.idempotents[q.e])},
                   {"f", s.format(d.idempotents[q.f])},
                   {"g", s.format(d.idempotents[q.g])},
                   {"h", s.format(d.idempotents[q.h])},
                   {"orientation", orientation_name(q.orientation)},
                   {"u", s.format(ss.witnesses[q.u])}});
    }
    return {{"format", "pmon.squares"},
            {"version", kFormatVersion},
            {"monoid", d.semigroup.name()},
            {"rank", d.rank},
            {"squares", a}};
  }

  // ---------------------------------------------------------------------
  // Linked diamonds (s,u;v,w): projections of D with (s,v),(s,w),(u,v),(u,w)
  // friendly and psp = v, pup = w for some projection p of the monoid.

  template <typename E>
  struct LinkedDiamond {
    int  s, u, v, w;  // projection indices of the D-class
    E    p;           // first witness in canonical order
    int  witnesses = 0;
    bool d1() const {
      return s == u;
    }
    bool d2() const {
      return v == w;
    }
    bool d3() const {
      return s == v && u == w;
    }
    bool degenerate() const {
      return d1() || d2() || d3();
    }
  };

  template <FiniteSemigroup S>
  std::vector<LinkedDiamond<typename S::element_type>>
  enumerate_linked_diamonds(DClassData<S> const& d, std::vector<typename S::element_type> const& P_all) {
    using E = typename S::element_type;
    static_assert(S::has_star);
    int const np = static_cast<int>(d.projections.size());
    std::map<std::tuple<int, int, int, int>, LinkedDiamond<E>> found;
    std::vector<int> conj(np);
    for (auto const& p : P_all) {
      for (int s = 0; s < np; ++s) {
        auto it = d.proj_index.find(d.product(d.product(p, d.projections[s]), p));
        conj[s] = it == d.proj_index.end() ? -1 : it->second;
      }
      for (int s = 0; s < np; ++s) {
        int v = conj[s];
        if (v < 0 || !d.friendly(s, v))
          continue;
        for (int u = 0; u < np; ++u) {
          int w = conj[u];
          if (w < 0 || !d.friendly(s, w) || !d.friendly(u, v) || !d.friendly(u, w))
            continue;
          auto [it, fresh] = found.emplace(std::tuple(s, u, v, w), LinkedDiamond<E>{s, u, v, w, p, 0});
          ++it->second.witnesses;
        }
      }
    }
    std::vector<LinkedDiamond<E>> out;
    for (auto& [k, x] : found)
      out.push_back(x);
    return out;
  }

  template <FiniteSemigroup S>
  std::vector<LinkedDiamond<typename S::element_type>> enumerate_linked_diamonds(DClassData<S> const& d) {
    return enumerate_linked_diamonds(d, projections(d.semigroup));
  }

  // (s,u,w) is a p-linked triangle when (s,u;s,w) is a p-linked diamond
  template <typename E>
  struct LinkedTriangle {
    int s, u, w;
    E   p;
  };

  template <typename E>
  std::vector<LinkedTriangle<E>> linked_triangles(std::vector<LinkedDiamond<E>> const& diamonds) {
    std::vector<LinkedTriangle<E>> out;
    for (auto const& x : diamonds)
      if (x.s == x.v)
        out.push_back({x.s, x.u, x.w, x.p});
    return out;
  }

  template <FiniteSemigroup S>
  bool is_linked_pair(S const& sg, typename S::element_type const& p,
                      typename S::element_type const& s, typename S::element_type const& u) {
    auto sp = sg.product(s, p), up = sg.product(u, p);
    return sg.product(sg.product(sp, up), s) == s && sg.product(sg.product(up, sp), u) == u;
  }

  template <FiniteSemigroup S>
  nlohmann::json to_json(DClassData<S> const& d,
                         std::vector<LinkedDiamond<typename S::element_type>> const& ds) {
    nlohmann::json a = nlohmann::json::array();
    auto const&    g = d.semigroup;
    for (auto const& x : ds) {
      nlohmann::json deg = nlohmann::json::array();
      if (x.d1())
        deg.push_back("D1");
      if (x.d2())
        deg.push_back("D2");
      if (x.d3())
        deg.push_back("D3");
      a.push_back({{"s", g.format(d.projections[x.s])},
                   {"u", g.format(d.projections[x.u])},
                   {"v", g.format(d.projections[x.v])},
                   {"w", g.format(d.projections[x.w])},
                   {"p", g.format(x.p)},
                   {"witnesses", x.witnesses},
                   {"degenerate", deg}});
    }
    return {{"format", "pmon.diamonds"},
            {"version", kFormatVersion},
            {"monoid", d.semigroup.name()},
            {"rank", d.rank},
            {"diamonds", a}};
  }

  // ---------------------------------------------------------------------
  // NT-reducing squares in P_n.  The square is (e1 e2; e3 e) with base e.

  inline bool is_nt_reducing(Square<Partition> const& q) {
    return r_related(q.e, q.f) && r_related(q.g, q.h) && l_related(q.e, q.g) && l_related(q.f, q.h)
           && ntu(q.f) < ntu(q.h) && ntd(q.g) < ntd(q.h);
  }

  struct WitnessedSquare {
    Square<Partition> square;
    Orientation       orientation;
    Partition         u;
  };

  // e L f and ker(e) ⊆ ker(f): the square (fD(e) f; eD(e) e), RL-singularised
  // by D(e).
  inline WitnessedSquare ehresmann_square(Partition const& e, Partition const& f) {
    if (!l_related(e, f) || !ker(e).finer_than(ker(f)))
      throw Error("ehresmann_square needs e L f and ker(e) ⊆ ker(f)");
    auto De = d_projection(e);
    return {{multiply(f, De), f, multiply(e, De), e}, Orientation::RL, De};
  }

  // For e = (A|B|C over A|B|C) ⊕ rest, with A ∪ A' a transversal and B, C
  // upper blocks whose lower copies B', C' are blocks: the square of the
  // type-7 construction and its RL witness.  Blocks are given by canonical
  // block ids of e.
  inline WitnessedSquare type7_square(Partition const& e, int A, int B, int C) {
    int              n = e.degree();
    auto             s = block_shape(e);
    auto upper_of      = [&](int blk) {
      std::vector<int> v;
      for (int i = 0; i < n; ++i)
        if (e.label(i) == blk)
          v.push_back(i);
      return v;
    };
    auto lower_of = [&](int blk) {
      std::vector<int> v;
      for (int i = 0; i < n; ++i)
        if (e.label(n + i) == blk)
          v.push_back(i);
      return v;
    };
    if (!(s.has_upper[A] && s.has_lower[A]) || s.has_lower[B] || s.has_lower[C] || B == C)
      throw Error("type7_square: block roles do not fit");
    auto Au = upper_of(A), Bu = upper_of(B), Cu = upper_of(C);
    // lower copies of B and C
    int  Bl = e.label(n + Bu[0]), Cl = e.label(n + Cu[0]);
    if (lower_of(Bl) != Bu || lower_of(Cl) != Cu || s.has_upper[Bl] || s.has_upper[Cl]
        || lower_of(A) != Au)
      throw Error("type7_square: e is not of the form (A|B|C over A|B|C) + f");
    int const fresh = 2 * kMaxDegree;
    auto      build = [&](auto&& assign) {
      std::vector<int> v(2 * n);
      for (int i = 0; i < 2 * n; ++i)
        v[i] = e.label(i);
      assign(v);
      return Partition::from_labels(n, v);
    };
    // ids: tA transversal, uB upper B, dB lower B', uC upper C, dC lower C'
    int tA = fresh, uB = fresh + 1, dB = fresh + 2, uC = fresh + 3, dC = fresh + 4;
    auto set = [&](std::vector<int>& v, std::vector<int> const& pts, bool lower, int id) {
      for (int i : pts)
        v[(lower ? n : 0) + i] = id;
    };
    auto e1 = build([&](std::vector<int>& v) {
      set(v, Au, false, tA), set(v, Cu, false, tA), set(v, Bu, false, uB);
      set(v, Au, true, tA), set(v, Bu, true, tA), set(v, Cu, true, dC);
    });
    auto e2 = build([&](std::vector<int>& v) {
      set(v, Au, false, tA), set(v, Cu, false, tA), set(v, Bu, false, uB);
      set(v, Au, true, tA), set(v, Bu, true, dB), set(v, Cu, true, dC);
    });
    auto e3 = build([&](std::vector<int>& v) {
      set(v, Au, false, tA), set(v, Bu, false, uB), set(v, Cu, false, uC);
      set(v, Au, true, tA), set(v, Bu, true, tA), set(v, Cu, true, dC);
    });
    auto u = build([&](std::vector<int>& v) {
      set(v, Au, false, tA), set(v, Bu, false, uB), set(v, Cu, false, uC);
      set(v, Au, true, tA), set(v, Bu, true, tA), set(v, Cu, true, uC);
    });
    return {{e1, e2, e3, e}, Orientation::RL, u};
  }

  // F(n,r) for r ≥ 1: idempotents with NTu = 0 or NTd = 0, and projections with
  // exactly one upper non-transversal block.
  inline bool in_generating_set(Partition const& e) {
    return ntu(e) == 0 || ntd(e) == 0 || (is_projection(e) && ntu(e) == 1);
  }

  namespace detail {
    inline WitnessedSquare star_square(WitnessedSquare const& w) {
      Orientation o = w.orientation == Orientation::LR   ? Orientation::UD
                      : w.orientation == Orientation::RL ? Orientation::DU
                      : w.orientation == Orientation::UD ? Orientation::LR
                                                         : Orientation::RL;
      return {{involution(w.square.e), involution(w.square.g), involution(w.square.f),
               involution(w.square.h)},
              o,
              involution(w.u)};
    }

    // e not a projection and ker(e) ⊄ coker(e): merge an upper block with a
    // transversal, preferring one in the same KER component.
    inline std::optional<WitnessedSquare> merge_square(Partition const& e) {
      int  n     = e.degree();
      auto s     = block_shape(e);
      auto super = ker(e).join(coker(e));
      int  A = -1, Apt = -1;
      for (int i = 0; i < n && A < 0; ++i)
        if (!s.has_lower[e.label(i)])
          A = e.label(i), Apt = i;
      if (A < 0)
        return std::nullopt;
      int T = -1;
      for (int pass = 0; pass < 2 && T < 0; ++pass)
        for (int i = 0; i < n && T < 0; ++i) {
          int b = e.label(i);
          if (s.has_lower[b] && (pass == 1 || super.related(i, Apt)))
            T = b;
        }
      if (T < 0)
        return std::nullopt;
      std::vector<int> v(2 * n);
      for (int i = 0; i < 2 * n; ++i)
        v[i] = e.label(i) == A ? T : e.label(i);
      auto f = Partition::from_labels(n, v);
      if (!is_idempotent(f))
        return std::nullopt;
      return ehresmann_square(e, f);
    }
  }  // namespace detail

  // An NT-reducing singular square with base e, built from the Ehresmann
  // square or the type-7 square, for e ∈ E(n,r) \ F(n,r), r ≥ 1.
  inline std::optional<WitnessedSquare> reducing_square(Partition const& e) {
    if (!is_idempotent(e) || rank(e) < 1 || in_generating_set(e))
      return std::nullopt;
    if (is_projection(e)) {
      auto s = block_shape(e);
      int  A = -1, B = -1, C = -1;
      for (int b = 0; b < s.nblocks; ++b) {
        if (s.has_upper[b] && s.has_lower[b] && A < 0)
          A = b;
        else if (s.has_upper[b] && !s.has_lower[b]) {
          if (B < 0)
            B = b;
          else if (C < 0)
            C = b;
        }
      }
      if (A < 0 || C < 0)
        return std::nullopt;
      return type7_square(e, A, B, C);
    }
    if (!ker(e).finer_than(coker(e)))
      return detail::merge_square(e);
    if (auto w = detail::merge_square(involution(e)))
      return detail::star_square(*w);
    return std::nullopt;
  }

  // ---------------------------------------------------------------------
  // Labels

  // minima of the upper and lower parts of each transversal, by upper minimum
  inline std::vector<std::pair<int, int>> label_prime(Partition const& e) {
    int              n = e.degree();
    std::vector<int> up(e.num_blocks(), 0), lo(e.num_blocks(), 0);
    for (int i = n; i >= 1; --i) {
      up[e.upper(i)] = i;
      lo[e.lower(i)] = i;
    }
    std::vector<std::pair<int, int>> out;
    for (int b = 0; b < e.num_blocks(); ++b)
      if (up[b] && lo[b])
        out.push_back({up[b], lo[b]});
    std::sort(out.begin(), out.end());
    return out;
  }

  inline Perm label(Partition const& e) {
    auto lp = label_prime(e);
    if (lp.empty())
      throw Error("label of a rank-0 partition is undefined");
    std::vector<int> lows;
    for (auto [a, b] : lp)
      lows.push_back(b);
    std::vector<int> sorted = lows;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> img;
    for (int b : lows)
      img.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), b) - sorted.begin()));
    return Perm(img);
  }

  inline bool is_coxeter_idempotent(Partition const& e) {
    auto p = label(e);
    int  moved = 0, first = -1;
    for (int i = 0; i < p.degree(); ++i)
      if (p[i] != i) {
        if (first < 0)
          first = i;
        ++moved;
      }
    return moved == 2 && p[first] == first + 1;
  }

}  // namespace pmon

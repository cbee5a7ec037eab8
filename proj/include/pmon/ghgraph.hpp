#pragma once

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "biorder.hpp"
#include "green.hpp"

namespace pmon {

  // Bipartite graph with left vertices the R-classes and right vertices the
  // L-classes of a D-class; each idempotent is an edge.
  struct GHGraph {
    int              left = 0, right = 0;
    std::vector<int> edge_left, edge_right;  // indexed by idempotent

    int num_edges() const {
      return static_cast<int>(edge_left.size());
    }
    // vertex ids: left i -> i, right j -> left + j
    int vertex_of_left(int i) const {
      return i;
    }
    int vertex_of_right(int j) const {
      return left + j;
    }
  };

  template <FiniteSemigroup S>
  GHGraph build_gh_graph(DClassData<S> const& d) {
    return {d.num_rows(), d.num_cols(), d.idem_row, d.idem_col};
  }

  namespace detail {
    struct DSU {
      std::vector<int> p;
      explicit DSU(int n) : p(n) {
        for (int i = 0; i < n; ++i)
          p[i] = i;
      }
      int find(int x) {
        while (p[x] != x)
          x = p[x] = p[p[x]];
        return x;
      }
      bool unite(int a, int b) {
        a = find(a), b = find(b);
        if (a == b)
          return false;
        p[std::max(a, b)] = std::min(a, b);
        return true;
      }
    };
  }  // namespace detail

  inline int count_components(GHGraph const& g, std::vector<int> const& edges) {
    detail::DSU dsu(g.left + g.right);
    int         comps = g.left + g.right;
    for (int e : edges)
      comps -= dsu.unite(g.edge_left[e], g.left + g.edge_right[e]);
    return comps;
  }

  inline bool is_connected(GHGraph const& g) {
    std::vector<int> all(g.num_edges());
    for (int e = 0; e < g.num_edges(); ++e)
      all[e] = e;
    return count_components(g, all) == 1;
  }

  enum class TreeKind { Generic, Lex, FullDomain, FullCodomain, WithProjection, PGTree, Rank0 };

  inline char const* tree_kind_name(TreeKind k) {
    switch (k) {
      case TreeKind::Generic: return "generic";
      case TreeKind::Lex: return "T_lex";
      case TreeKind::FullDomain: return "T_fd";
      case TreeKind::FullCodomain: return "T_fc";
      case TreeKind::WithProjection: return "T_s";
      case TreeKind::PGTree: return "T_pg";
      case TreeKind::Rank0: return "T_rank0";
    }
    return "?";
  }

  // Vertex subset of a GH graph; full when both lists are absent.
  struct Scope {
    bool             full = true;
    std::vector<int> left, right;

    static Scope induced(std::vector<int> l, std::vector<int> r) {
      std::sort(l.begin(), l.end());
      std::sort(r.begin(), r.end());
      return {false, std::move(l), std::move(r)};
    }
  };

  struct TreeSet {
    TreeKind         kind = TreeKind::Generic;
    std::vector<int> edges;  // sorted idempotent indices
    Scope            scope;  // what the set claims to span

    bool contains(int e) const {
      return std::binary_search(edges.begin(), edges.end(), e);
    }
  };

  namespace detail {
    inline void normalize(std::vector<int>& v) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    }
  }  // namespace detail

  inline bool verify_spanning_tree(GHGraph const& g, TreeSet const& t, Scope const& scope) {
    std::vector<bool> inL(g.left, scope.full), inR(g.right, scope.full);
    if (!scope.full) {
      for (int i : scope.left)
        inL[i] = true;
      for (int j : scope.right)
        inR[j] = true;
    }
    int nv = 0;
    for (bool b : inL)
      nv += b;
    for (bool b : inR)
      nv += b;
    if (static_cast<int>(t.edges.size()) != nv - 1)
      return false;
    detail::DSU dsu(g.left + g.right);
    for (int e : t.edges) {
      if (e < 0 || e >= g.num_edges())
        return false;
      if (!inL[g.edge_left[e]] || !inR[g.edge_right[e]])
        return false;
      if (!dsu.unite(g.edge_left[e], g.left + g.edge_right[e]))
        return false;
    }
    int root = -1;
    for (int i = 0; i < g.left; ++i)
      if (inL[i]) {
        int r = dsu.find(i);
        if (root >= 0 && r != root)
          return false;
        root = r;
      }
    for (int j = 0; j < g.right; ++j)
      if (inR[j]) {
        int r = dsu.find(g.left + j);
        if (root >= 0 && r != root)
          return false;
        root = r;
      }
    return true;
  }

  inline bool verify_spanning_tree(GHGraph const& g, TreeSet const& t) {
    return verify_spanning_tree(g, t, t.scope);
  }

  // BFS from a left vertex, visiting edges in idempotent order.
  inline TreeSet spanning_tree_bfs(GHGraph const& g, int root = 0) {
    std::vector<std::vector<int>> adj(g.left + g.right);
    for (int e = 0; e < g.num_edges(); ++e) {
      adj[g.edge_left[e]].push_back(e);
      adj[g.left + g.edge_right[e]].push_back(e);
    }
    std::vector<bool> seen(g.left + g.right);
    std::deque<int>   queue{root};
    seen[root] = true;
    TreeSet t;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int e : adj[v]) {
        int a = g.edge_left[e], b = g.left + g.edge_right[e];
        int w = v == a ? b : a;
        if (!seen[w]) {
          seen[w] = true;
          t.edges.push_back(e);
          queue.push_back(w);
        }
      }
    }
    if (static_cast<int>(t.edges.size()) != g.left + g.right - 1)
      throw Error("Graham-Houghton graph is not connected");
    detail::normalize(t.edges);
    return t;
  }

  // Spanning tree containing the forest `forced`, completed greedily in
  // idempotent order.
  inline TreeSet spanning_tree_containing(GHGraph const& g, std::vector<int> const& forced) {
    detail::DSU dsu(g.left + g.right);
    TreeSet     t;
    for (int e : forced) {
      if (!dsu.unite(g.edge_left[e], g.left + g.edge_right[e]))
        throw Error("forced edges contain a cycle");
      t.edges.push_back(e);
    }
    for (int e = 0; e < g.num_edges(); ++e)
      if (dsu.unite(g.edge_left[e], g.left + g.edge_right[e]))
        t.edges.push_back(e);
    if (static_cast<int>(t.edges.size()) != g.left + g.right - 1)
      throw Error("Graham-Houghton graph is not connected");
    detail::normalize(t.edges);
    return t;
  }

  // Spanning tree through every projection of the class.
  template <FiniteSemigroup S>
  TreeSet projection_tree(DClassData<S> const& d) {
    std::vector<int> forced;
    for (auto const& p : d.projections)
      forced.push_back(*d.idempotent_index(p));
    TreeSet t = spanning_tree_containing(build_gh_graph(d), forced);
    t.kind    = TreeKind::PGTree;
    return t;
  }

  // ---------------------------------------------------------------------
  // Named trees for D(n,r) in P_n

  using PnClass = DClassData<PartitionMonoid>;

  namespace detail {
    inline void check_middle_rank(PnClass const& d) {
      int n = d.semigroup.degree();
      if (d.rank < 1 || d.rank > n - 2)
        throw Error("rank " + std::to_string(d.rank) + " outside 1.." + std::to_string(n - 2));
    }

    inline int edge_of(PnClass const& d, Partition const& e) {
      auto k = d.idempotent_index(e);
      if (!k)
        throw Error("not an idempotent of the class: " + e.to_string());
      return *k;
    }

    // V given by 0-based block labels of 1..n, C a cross-section (1-based)
    inline Partition e_vc(int n, std::vector<int> const& V, std::vector<int> const& C) {
      std::vector<int> v(2 * n);
      for (int i = 0; i < n; ++i)
        v[i] = V[i];
      for (int j = 0; j < n; ++j)
        v[n + j] = n + j;
      for (int c : C)
        v[n + c - 1] = V[c - 1];
      return Partition::from_labels(n, v);
    }

    inline std::vector<int> projections_with_ntu(PnClass const& d, int k) {
      std::vector<int> out;
      for (size_t p = 0; p < d.projections.size(); ++p)
        if (ntu(d.projections[p]) == k)
          out.push_back(static_cast<int>(p));
      return out;
    }
  }  // namespace detail

  // Spanning tree of the transformation part of D(n,r): e_{V,C(V)} for every
  // partition V of [n] into r blocks, and e_{V(C),C} for every r-subset C.
  inline TreeSet t_lex(PnClass const& d) {
    detail::check_middle_rank(d);
    int     n = d.semigroup.degree(), r = d.rank;
    TreeSet t;
    t.kind = TreeKind::Lex;
    detail::for_each_rgs(n, [&](std::vector<int> const& V) {
      if (*std::max_element(V.begin(), V.end()) + 1 != r)
        return;
      std::vector<int> C;
      std::vector<bool> seen(r);
      for (int i = 0; i < n; ++i)
        if (!seen[V[i]]) {
          seen[V[i]] = true;
          C.push_back(i + 1);
        }
      t.edges.push_back(detail::edge_of(d, detail::e_vc(n, V, C)));
    });
    std::vector<int> mask(n, 0);
    std::fill(mask.begin(), mask.begin() + r, 1);
    do {
      std::vector<int> C;
      for (int i = 0; i < n; ++i)
        if (mask[i])
          C.push_back(i + 1);
      std::vector<int> V(n);
      int              blk = 0;
      for (int i = 1; i <= n; ++i) {
        V[i - 1] = blk;
        if (blk < r - 1 && i == C[blk])
          ++blk;
      }
      t.edges.push_back(detail::edge_of(d, detail::e_vc(n, V, C)));
    } while (std::prev_permutation(mask.begin(), mask.end()));
    detail::normalize(t.edges);
    std::vector<int> L, R;
    for (int p : detail::projections_with_ntu(d, 0))
      L.push_back(p);
    for (int p : detail::projections_with_ntu(d, n - r))
      R.push_back(p);
    t.scope = Scope::induced(L, R);
    return t;
  }

  // e_p for a projection p: transversals A_1 ∪ B_1 ∪ ... ∪ B_k ∪ A_1' and
  // A_i ∪ A_i' (i ≥ 2), lower blocks B_j'.
  inline Partition e_p(Partition const& p) {
    int  n = p.degree();
    auto s = block_shape(p);
    int  A1 = -1;
    for (int i = 0; i < n && A1 < 0; ++i)
      if (s.has_lower[p.label(i)])
        A1 = p.label(i);
    if (A1 < 0)
      throw Error("e_p needs a projection of positive rank");
    std::vector<int> v(2 * n);
    for (int i = 0; i < n; ++i) {
      int b    = p.label(i);
      v[i]     = s.has_lower[b] ? b : A1;
      v[n + i] = p.label(n + i);
    }
    return Partition::from_labels(n, v);
  }

  inline TreeSet t_fd(PnClass const& d) {
    int     n = d.semigroup.degree(), r = d.rank;
    TreeSet t = t_lex(d);
    t.kind    = TreeKind::FullDomain;
    for (int k = 1; k <= n - r - 1; ++k)
      for (int p : detail::projections_with_ntu(d, k))
        t.edges.push_back(detail::edge_of(d, e_p(d.projections[p])));
    detail::normalize(t.edges);
    std::vector<int> R;
    for (int k = 1; k <= n - r; ++k)
      for (int p : detail::projections_with_ntu(d, k))
        R.push_back(p);
    t.scope = Scope::induced(detail::projections_with_ntu(d, 0), R);
    return t;
  }

  inline TreeSet t_fc(PnClass const& d) {
    TreeSet fd = t_fd(d);
    TreeSet t;
    t.kind = TreeKind::FullCodomain;
    for (int e : fd.edges)
      t.edges.push_back(detail::edge_of(d, involution(d.idempotents[e])));
    detail::normalize(t.edges);
    t.scope = Scope::induced(fd.scope.right, fd.scope.left);
    return t;
  }

  // T_fd ∪ T_fc ∪ {s} for a full-domain projection s
  inline TreeSet t_s(PnClass const& d, Partition const& s) {
    detail::check_middle_rank(d);
    auto it = d.proj_index.find(s);
    if (it == d.proj_index.end() || ntu(s) != 0)
      throw Error("t_s needs a full-domain projection of the class, got " + s.to_string());
    TreeSet fd = t_fd(d), fc = t_fc(d), t;
    t.kind     = TreeKind::WithProjection;
    t.edges    = fd.edges;
    t.edges.insert(t.edges.end(), fc.edges.begin(), fc.edges.end());
    t.edges.push_back(detail::edge_of(d, s));
    detail::normalize(t.edges);
    return t;
  }

  inline TreeSet t_pg(PnClass const& d) {
    TreeSet t = t_fd(d);
    t.kind    = TreeKind::PGTree;
    for (auto const& p : d.projections)
      t.edges.push_back(detail::edge_of(d, p));
    detail::normalize(t.edges);
    t.scope = {};
    return t;
  }

  // rank-0 idempotents with a single upper block or a single lower block
  inline TreeSet t_rank0(PnClass const& d) {
    if (d.rank != 0 || d.semigroup.degree() < 2)
      throw Error("t_rank0 needs the rank-0 class of P_n with n ≥ 2");
    TreeSet t;
    t.kind = TreeKind::Rank0;
    for (size_t k = 0; k < d.idempotents.size(); ++k) {
      auto const& e = d.idempotents[k];
      if (ker(e).num_classes() == 1 || coker(e).num_classes() == 1)
        t.edges.push_back(static_cast<int>(k));
    }
    return t;
  }

  // Directed spanning tree of the friendliness graph on P_D, by BFS from the
  // projection with index root; each edge is (parent, child).
  template <FiniteSemigroup S>
  std::vector<std::pair<int, int>> friendliness_tree(DClassData<S> const& d, int root = 0) {
    int const                        np = static_cast<int>(d.projections.size());
    std::vector<bool>                seen(np);
    std::deque<int>                  queue{root};
    std::vector<std::pair<int, int>> out;
    seen[root] = true;
    while (!queue.empty()) {
      int p = queue.front();
      queue.pop_front();
      for (int q = 0; q < np; ++q)
        if (!seen[q] && d.friendly(p, q)) {
          seen[q] = true;
          out.push_back({p, q});
          queue.push_back(q);
        }
    }
    if (static_cast<int>(out.size()) != np - 1)
      throw Error("friendliness graph is not connected");
    return out;
  }

  template <FiniteSemigroup S>
  std::string to_dot(DClassData<S> const& d, GHGraph const& g, TreeSet const* tree = nullptr) {
    std::ostringstream os;
    auto               q = [](std::string const& s) {
      std::string o = "\"";
      for (char c : s)
        o += c == '"' ? std::string("\\\"") : std::string(1, c);
      return o + "\"";
    };
    os << "graph GH {\n  rankdir=LR;\n  node [shape=box, fontsize=10];\n";
    for (int i = 0; i < g.left; ++i)
      os << "  i" << i << " [label=" << q(d.semigroup.format(d.rows[i])) << "];\n";
    for (int j = 0; j < g.right; ++j)
      os << "  j" << j << " [label=" << q(d.semigroup.format(d.cols[j])) << "];\n";
    for (int e = 0; e < g.num_edges(); ++e) {
      os << "  i" << g.edge_left[e] << " -- j" << g.edge_right[e] << " [tooltip="
         << q(d.semigroup.format(d.idempotents[e]));
      if (tree && tree->contains(e))
        os << ", color=red, penwidth=2";
      os << "];\n";
    }
    os << "}\n";
    return os.str();
  }

  template <FiniteSemigroup S>
  nlohmann::json to_json(DClassData<S> const& d, TreeSet const& t) {
    nlohmann::json e = nlohmann::json::array();
    for (int k : t.edges)
      e.push_back(d.semigroup.format(d.idempotents[k]));
    nlohmann::json j{{"format", "pmon.tree"},
                     {"version", kFormatVersion},
                     {"monoid", d.semigroup.name()},
                     {"rank", d.rank},
                     {"kind", tree_kind_name(t.kind)},
                     {"edges", e}};
    if (!t.scope.full)
      j["scope"] = {{"rows", t.scope.left}, {"cols", t.scope.right}};
    return j;
  }

}  // namespace pmon

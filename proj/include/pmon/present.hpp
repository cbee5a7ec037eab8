#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "biorder.hpp"
#include "ghgraph.hpp"
#include "green.hpp"

namespace pmon {

  // Letters are g+1 for generator g and -(g+1) for its inverse.
  using Word = std::vector<int>;

  inline int letter(int gen, int exp = 1) {
    return exp > 0 ? gen + 1 : -(gen + 1);
  }
  inline int gen_of(int l) {
    return (l > 0 ? l : -l) - 1;
  }

  inline Word free_reduce(Word const& w) {
    Word out;
    for (int l : w) {
      if (!out.empty() && out.back() == -l)
        out.pop_back();
      else
        out.push_back(l);
    }
    return out;
  }

  inline Word cyclic_reduce(Word w) {
    w       = free_reduce(w);
    size_t a = 0, b = w.size();
    while (b - a >= 2 && w[a] == -w[b - 1]) {
      ++a;
      --b;
    }
    return Word(w.begin() + a, w.begin() + b);
  }

  inline Word inverse(Word const& w) {
    Word out(w.rbegin(), w.rend());
    for (int& l : out)
      l = -l;
    return out;
  }

  // Least rotation of w or of w^{-1}; w must be cyclically reduced.
  inline Word cyclic_canonical(Word const& w) {
    Word best = w;
    for (Word const& base : {w, inverse(w)})
      for (size_t k = 0; k < base.size(); ++k) {
        Word rot(base.begin() + k, base.end());
        rot.insert(rot.end(), base.begin(), base.begin() + k);
        if (rot < best)
          best = rot;
      }
    return best;
  }

  struct GroupPresentation {
    std::vector<std::string> generators;
    std::vector<Word>        relators;

    int num_generators() const {
      return static_cast<int>(generators.size());
    }
    int add_generator(std::string name) {
      generators.push_back(std::move(name));
      return num_generators() - 1;
    }
    // stores the free reduction; trivial words are dropped
    void add_relator(Word const& w) {
      auto r = free_reduce(w);
      if (!r.empty())
        relators.push_back(std::move(r));
    }
    size_t total_length() const {
      size_t s = 0;
      for (auto const& r : relators)
        s += r.size();
      return s;
    }
    std::string word_text(Word const& w, bool cas_names = false) const {
      std::string s;
      for (size_t k = 0; k < w.size(); ++k) {
        if (k)
          s += '*';
        s += cas_names ? "a" + std::to_string(gen_of(w[k]) + 1) : generators[gen_of(w[k])];
        if (w[k] < 0)
          s += "^-1";
      }
      return s;
    }
  };

  inline void drop_duplicate_relators(GroupPresentation& p) {
    std::set<Word>    seen;
    std::vector<Word> out;
    for (auto const& r : p.relators)
      if (seen.insert(r).second)
        out.push_back(r);
    p.relators = std::move(out);
  }

  // ---------------------------------------------------------------------
  // Presentations of maximal subgroups

  template <FiniteSemigroup S>
  std::string idempotent_generator_name(DClassData<S> const& d, int e) {
    return "a[" + d.semigroup.format(d.idempotents[e]) + "]";
  }

  // Generators a_e (e ∈ E_D); relators a_e (e ∈ T) and a_e^-1 a_f a_h^-1 a_g
  // for each singular square (e f; g h).
  template <FiniteSemigroup S>
  GroupPresentation presn_ig(DClassData<S> const& d, TreeSet const& t, SquareSet<S> const& sq) {
    auto g = build_gh_graph(d);
    if (!verify_spanning_tree(g, t, Scope{}))
      throw Error("presn_ig: tree does not span the Graham-Houghton graph");
    GroupPresentation p;
    for (size_t e = 0; e < d.idempotents.size(); ++e)
      p.add_generator(idempotent_generator_name(d, static_cast<int>(e)));
    for (int e : t.edges)
      p.add_relator({letter(e)});
    for (auto const& q : sq.squares)
      p.add_relator({letter(q.e, -1), letter(q.f), letter(q.h, -1), letter(q.g)});
    drop_duplicate_relators(p);
    return p;
  }

  // presn_ig plus a_e a_{e*} for every e; the tree must contain P_D.
  template <FiniteSemigroup S>
  GroupPresentation presn_pg_squares(DClassData<S> const& d, TreeSet const& t, SquareSet<S> const& sq) {
    static_assert(S::has_star);
    for (auto const& pr : d.projections)
      if (!t.contains(*d.idempotent_index(pr)))
        throw Error("presn_pg_squares: tree must contain every projection of the class");
    auto p = presn_ig(d, t, sq);
    for (size_t e = 0; e < d.idempotents.size(); ++e) {
      int es = *d.idempotent_index(d.semigroup.star(d.idempotents[e]));
      if (static_cast<int>(e) <= es)
        p.add_relator({letter(static_cast<int>(e)), letter(es)});
    }
    drop_duplicate_relators(p);
    return p;
  }

  // indices of the generators a_{p,q}, (p,q) friendly, in (p,q) order
  template <FiniteSemigroup S>
  std::vector<std::vector<int>> friendly_generators(DClassData<S> const& d, GroupPresentation& p) {
    int const                      np = static_cast<int>(d.projections.size());
    std::vector<std::vector<int>>  id(np, std::vector<int>(np, -1));
    for (int a = 0; a < np; ++a)
      for (int b = 0; b < np; ++b)
        if (d.friendly(a, b))
          id[a][b] = p.add_generator("a[" + d.semigroup.format(d.projections[a]) + ", "
                                     + d.semigroup.format(d.projections[b]) + "]");
    return id;
  }

  template <FiniteSemigroup S>
  void check_friendliness_tree(DClassData<S> const& d, std::vector<std::pair<int, int>> const& tree) {
    int const np = static_cast<int>(d.projections.size());
    if (static_cast<int>(tree.size()) != np - 1)
      throw Error("friendliness tree has the wrong number of edges");
    std::vector<int> indeg(np, 0);
    detail::DSU      dsu(np);
    for (auto [a, b] : tree) {
      if (a < 0 || b < 0 || a >= np || b >= np || a == b || !d.friendly(a, b))
        throw Error("friendliness tree uses a non-friendly pair");
      ++indeg[b];
      if (!dsu.unite(a, b))
        throw Error("friendliness tree has a cycle");
    }
    int roots = 0;
    for (int x : indeg) {
      if (x > 1)
        throw Error("friendliness tree is not a rooted tree");
      roots += x == 0;
    }
    if (roots != 1)
      throw Error("friendliness tree is not a rooted tree");
  }

  namespace detail {
    template <FiniteSemigroup S>
    GroupPresentation pg_linked_common(DClassData<S> const& d,
                                       std::vector<std::pair<int, int>> const& tree,
                                       std::vector<std::vector<int>>& id) {
      check_friendliness_tree(d, tree);
      GroupPresentation p;
      id           = friendly_generators(d, p);
      int const np = static_cast<int>(d.projections.size());
      for (auto [a, b] : tree)
        p.add_relator({letter(id[a][b])});
      for (int a = 0; a < np; ++a)
        p.add_relator({letter(id[a][a])});
      for (int a = 0; a < np; ++a)
        for (int b = a + 1; b < np; ++b)
          if (id[a][b] >= 0)
            p.add_relator({letter(id[a][b]), letter(id[b][a])});
      return p;
    }
  }  // namespace detail

  // Generators a_{p,q}; relators from the tree, a_{p,p}, a_{p,q} a_{q,p} and
  // a_{s,v}^-1 a_{s,w} a_{u,w}^-1 a_{u,v} for each non-degenerate diamond.
  template <FiniteSemigroup S>
  GroupPresentation presn_pg_linked(DClassData<S> const& d,
                                    std::vector<LinkedDiamond<typename S::element_type>> const& diamonds,
                                    std::vector<std::pair<int, int>> const& tree) {
    std::vector<std::vector<int>> id;
    auto                          p = detail::pg_linked_common(d, tree, id);
    for (auto const& x : diamonds)
      if (!x.degenerate())
        p.add_relator({letter(id[x.s][x.v], -1), letter(id[x.s][x.w]), letter(id[x.u][x.w], -1),
                       letter(id[x.u][x.v])});
    drop_duplicate_relators(p);
    return p;
  }

  // Same generators, with a_{u,s} a_{s,w} a_{u,w}^-1 for each linked triangle.
  template <FiniteSemigroup S>
  GroupPresentation presn_pg_triangles(DClassData<S> const& d,
                                       std::vector<LinkedTriangle<typename S::element_type>> const& tris,
                                       std::vector<std::pair<int, int>> const& tree) {
    std::vector<std::vector<int>> id;
    auto                          p = detail::pg_linked_common(d, tree, id);
    for (auto const& x : tris)
      if (x.s != x.u && x.s != x.w && x.u != x.w)
        p.add_relator({letter(id[x.u][x.s]), letter(id[x.s][x.w]), letter(id[x.u][x.w], -1)});
    drop_duplicate_relators(p);
    return p;
  }

  // ---------------------------------------------------------------------
  // Defining presentations of IG(E), RIG(E) and PG(P), as text

  struct SemigroupPresentationDoc {
    std::string                                      family;
    std::vector<std::string>                         generators;
    std::vector<std::pair<std::string, std::string>> relations;
    std::vector<std::string>                         relation_family;  // parallel to relations

    std::string to_text() const {
      std::ostringstream os;
      os << "# " << family << ": " << generators.size() << " generators, " << relations.size()
         << " relations\n";
      os << "generators:";
      for (auto const& g : generators)
        os << ' ' << g;
      os << "\n";
      for (size_t k = 0; k < relations.size(); ++k)
        os << relations[k].first << " = " << relations[k].second << "\n";
      return os.str();
    }
  };

  inline constexpr size_t kMaxEmitElements = 20000;

  template <FiniteSemigroup S>
  bool is_basic_pair(S const& s, typename S::element_type const& e, typename S::element_type const& f) {
    auto ef = s.product(e, f), fe = s.product(f, e);
    return ef == e || ef == f || fe == e || fe == f;
  }

  template <FiniteSemigroup S>
  SemigroupPresentationDoc emit_ig(S const& s, bool regular = false) {
    auto E = idempotents(s);
    if (E.size() * E.size() > kMaxEmitElements * kMaxEmitElements / 16)
      throw Error("too many idempotents to emit a presentation");
    SemigroupPresentationDoc doc;
    doc.family = regular ? "RIG" : "IG";
    std::map<typename S::element_type, std::string> x;
    for (size_t k = 0; k < E.size(); ++k) {
      x[E[k]] = "x" + std::to_string(k + 1);
      doc.generators.push_back(x[E[k]]);
    }
    for (auto const& e : E)
      for (auto const& f : E)
        if (is_basic_pair(s, e, f)) {
          doc.relations.push_back({x[e] + " " + x[f], x.at(s.product(e, f))});
          doc.relation_family.push_back("basic");
        }
    if (regular)
      for (auto const& e : E)
        for (auto const& f : E)
          for (auto const& h : sandwich_set(s, E, e, f)) {
            doc.relations.push_back({x[e] + " " + x[h] + " " + x[f], x[e] + " " + x[f]});
            doc.relation_family.push_back("sandwich");
          }
    return doc;
  }

  template <FiniteSemigroup S>
  SemigroupPresentationDoc emit_pg(S const& s) {
    static_assert(S::has_star);
    auto P = projections(s);
    if (P.size() > kMaxEmitElements)
      throw Error("too many projections to emit a presentation");
    SemigroupPresentationDoc                        doc;
    std::map<typename S::element_type, std::string> x;
    doc.family = "PG";
    for (size_t k = 0; k < P.size(); ++k) {
      x[P[k]] = "x" + std::to_string(k + 1);
      doc.generators.push_back(x[P[k]]);
    }
    for (auto const& p : P) {
      doc.relations.push_back({x[p] + " " + x[p], x[p]});
      doc.relation_family.push_back("idempotent");
    }
    for (auto const& p : P)
      for (auto const& q : P) {
        doc.relations.push_back({x[p] + " " + x[q] + " " + x[p] + " " + x[q], x[p] + " " + x[q]});
        doc.relation_family.push_back("product-idempotent");
      }
    for (auto const& p : P)
      for (auto const& q : P) {
        doc.relations.push_back({x[p] + " " + x[q] + " " + x[p], x.at(s.product(s.product(p, q), p))});
        doc.relation_family.push_back("conjugate");
      }
    return doc;
  }

  // PG(P) over the idempotents: basic-pair relations plus x_p x_q = x_{pq}
  template <FiniteSemigroup S>
  SemigroupPresentationDoc emit_pg_over_idempotents(S const& s) {
    auto doc   = emit_ig(s);
    doc.family = "PG/E";
    auto E     = idempotents(s);
    std::map<typename S::element_type, std::string> x;
    for (size_t k = 0; k < E.size(); ++k)
      x[E[k]] = "x" + std::to_string(k + 1);
    for (auto const& p : projections(s))
      for (auto const& q : projections(s)) {
        doc.relations.push_back({x.at(p) + " " + x.at(q), x.at(s.product(p, q))});
        doc.relation_family.push_back("projection");
      }
    return doc;
  }

  // ---------------------------------------------------------------------
  // Tietze simplification.  Repeatedly delete trivial relators and eliminate
  // a generator defined by a relator of length at most two; when none is
  // left, eliminate a generator occurring exactly once in a relator of length
  // at most kMaxSolveLength, choosing the substitution that least increases
  // the total relator length.  Ties go to the least generator.

  inline constexpr size_t kMaxSolveLength = 16;

  struct TietzeResult {
    GroupPresentation presentation;
    bool              budget_exhausted = false;
    int               eliminated       = 0;
    std::vector<int>  kept;  // original index of each surviving generator
  };

  inline TietzeResult tietze_simplify(GroupPresentation const& in, size_t budget = size_t(1) << 30) {
    int const                  G = in.num_generators();
    std::vector<Word>          rel;
    std::vector<std::set<int>> occ(G);
    std::set<int>              shortrel;
    std::vector<bool>          alive(G, true);
    auto                       index = [&](int r) {
      for (int l : rel[r])
        occ[gen_of(l)].insert(r);
      if (!rel[r].empty() && rel[r].size() <= 2)
        shortrel.insert(r);
    };
    for (auto const& w : in.relators) {
      rel.push_back(cyclic_reduce(w));
      index(static_cast<int>(rel.size()) - 1);
    }
    // position of the only occurrence of g in w, or -1
    auto sole = [](Word const& w, int g) {
      int pos = -1;
      for (int k = 0; k < static_cast<int>(w.size()); ++k)
        if (gen_of(w[k]) == g) {
          if (pos >= 0)
            return -1;
          pos = k;
        }
      return pos;
    };
    TietzeResult res;
    size_t       work = 0;
    while (true) {
      int best = G, best_rel = -1;
      for (int r : shortrel)
        for (int l : rel[r])
          if (gen_of(l) < best && sole(rel[r], gen_of(l)) >= 0)
            best = gen_of(l), best_rel = r;
      if (best_rel < 0) {
        // least estimated growth of the total relator length, then least generator
        long cost = 0;
        for (int g = 0; g < G; ++g) {
          long uses = -1;
          for (int r : occ[g]) {
            if (rel[r].size() > kMaxSolveLength || sole(rel[r], g) < 0)
              continue;
            if (uses < 0) {
              uses = 0;
              for (int r2 : occ[g])
                for (int l : rel[r2])
                  uses += gen_of(l) == g;
            }
            long len = static_cast<long>(rel[r].size());
            long c   = (uses - 1) * (len - 2) - len;
            if (best_rel < 0 || c < cost)
              best = g, best_rel = r, cost = c;
          }
        }
      }
      if (best_rel < 0)
        break;
      if (work > budget) {
        res.budget_exhausted = true;
        break;
      }
      // rotate to x^s y = 1, so x = y^-1 (s = 1) or x = y (s = -1)
      Word const& w   = rel[best_rel];
      int const   pos = sole(w, best);
      Word        y(w.begin() + pos + 1, w.end());
      y.insert(y.end(), w.begin(), w.begin() + pos);
      Word const repl = w[pos] > 0 ? inverse(y) : y;
      Word const irepl = inverse(repl);

      std::vector<int> touched(occ[best].begin(), occ[best].end());
      for (int r : touched) {
        for (int l : rel[r])
          occ[gen_of(l)].erase(r);
        shortrel.erase(r);
        Word nw;
        for (int l : rel[r]) {
          if (gen_of(l) != best) {
            nw.push_back(l);
            continue;
          }
          Word const& sub = l > 0 ? repl : irepl;
          nw.insert(nw.end(), sub.begin(), sub.end());
        }
        work += nw.size() + 1;
        rel[r] = cyclic_reduce(nw);
        index(r);
      }
      alive[best] = false;
      ++res.eliminated;
    }
    std::vector<int> newid(G, -1);
    for (int g = 0; g < G; ++g)
      if (alive[g]) {
        newid[g] = res.presentation.add_generator(in.generators[g]);
        res.kept.push_back(g);
      }
    std::set<Word> out;
    for (auto const& w : rel) {
      if (w.empty())
        continue;
      Word nw;
      for (int l : w)
        nw.push_back(l > 0 ? newid[gen_of(l)] + 1 : -(newid[gen_of(l)] + 1));
      out.insert(cyclic_canonical(nw));
    }
    for (auto const& w : out) {
      // a relator x x^-1 cannot survive cyclic reduction, so none are empty
      res.presentation.relators.push_back(w);
    }
    // shortest relators first, then lexicographic
    std::stable_sort(res.presentation.relators.begin(), res.presentation.relators.end(),
                     [](Word const& a, Word const& b) { return a.size() < b.size(); });
    return res;
  }

  // ---------------------------------------------------------------------
  // Output

  inline std::string to_cas_text(GroupPresentation const& p) {
    std::ostringstream os;
    os << "F := FreeGroup(";
    for (int g = 0; g < p.num_generators(); ++g)
      os << (g ? "," : "") << "\"a" << g + 1 << "\"";
    os << ");\n";
    for (int g = 0; g < p.num_generators(); ++g)
      os << "a" << g + 1 << " := F.avec[" << g + 1 << "];  # " << p.generators[g] << "\n";
    os << "rels := [";
    for (size_t k = 0; k < p.relators.size(); ++k)
      os << (k ? ", " : " ") << p.word_text(p.relators[k], true);
    os << " ];\n";
    return os.str();
  }

  inline nlohmann::json to_json(GroupPresentation const& p) {
    nlohmann::json rels = nlohmann::json::array();
    for (auto const& w : p.relators) {
      nlohmann::json a = nlohmann::json::array();
      for (int l : w)
        a.push_back({gen_of(l), l > 0 ? 1 : -1});
      rels.push_back(a);
    }
    return {{"format", "pmon.presentation"},
            {"version", kFormatVersion},
            {"generators", p.generators},
            {"relators", rels}};
  }

  inline GroupPresentation presentation_from_json(nlohmann::json const& j) {
    if (j.value("format", "") != "pmon.presentation")
      throw Error("not a presentation document");
    GroupPresentation p;
    for (auto const& g : j.at("generators"))
      p.add_generator(g.get<std::string>());
    for (auto const& r : j.at("relators")) {
      Word w;
      for (auto const& l : r) {
        int g = l.at(0).get<int>(), e = l.at(1).get<int>();
        if (g < 0 || g >= p.num_generators() || (e != 1 && e != -1))
          throw Error("bad letter in presentation document");
        w.push_back(letter(g, e));
      }
      p.add_relator(w);
    }
    return p;
  }

}  // namespace pmon

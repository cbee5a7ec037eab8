#pragma once

#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "pipeline.hpp"

namespace pmon::acceptance {

  struct Outcome {
    int         id = 0;
    std::string title;
    bool        pass = false;
    std::string detail;
  };

  namespace detail {
    struct Log {
      bool               ok = true;
      std::ostringstream os;
      // records a check; the message is kept only for failures and notes
      void check(bool cond, std::string const& what) {
        if (!cond) {
          ok = false;
          os << (os.tellp() > 0 ? "; " : "") << "FAILED " << what;
        }
      }
      void note(std::string const& what) {
        os << (os.tellp() > 0 ? "; " : "") << what;
      }
    };

    inline bool ambient_friendly(PartitionMonoid const& m, Partition const& p, Partition const& q) {
      return m.product(m.product(p, q), p) == p && m.product(m.product(q, p), q) == q;
    }

    inline bool tietze_keeps_abelianization(GroupPresentation const& p) {
      return abelianization(p) == abelianization(tietze_simplify(p).presentation);
    }

    inline bool is_linked_diamond(PartitionMonoid const& m, Partition const& s, Partition const& u,
                                  Partition const& v, Partition const& w, Partition const& p) {
      return ambient_friendly(m, s, v) && ambient_friendly(m, s, w) && ambient_friendly(m, u, v)
             && ambient_friendly(m, u, w) && m.product(m.product(p, s), p) == v
             && m.product(m.product(p, u), p) == w;
    }
  }  // namespace detail

  using detail::Log;

  inline Outcome worked_product() {
    Log  log;
    auto a  = Partition::parse("1 4; 2 3 4' 5'; 5 6; 1' 2' 6'; 3'");
    auto b  = Partition::parse("1 2; 3 4 1'; 5 5' 6'; 6; 2' 3'; 4'");
    auto ab = Partition::parse("1 4; 2 3 1' 5' 6'; 5 6; 2' 3'; 4'");
    auto pr = multiply_with_floats(a, b);
    log.check(multiply(a, b) == ab, "ab = " + multiply(a, b).to_string());
    log.check(pr.floats == 1, "floating count " + std::to_string(pr.floats));
    log.check(pr.floating == std::vector<std::vector<int>>{{1, 2, 6}}, "floating component");
    if (log.ok)
      log.note("ab = " + ab.to_string() + ", one floating component {1'',2'',6''}");
    return {1, "worked product", log.ok, log.os.str()};
  }

  inline Outcome idempotent_characterization() {
    Log    log;
    size_t total = 0, idem = 0;
    for (int n = 2; n <= 4; ++n)
      for (auto const& a : PartitionMonoid(n).elements()) {
        bool by_square = multiply(a, a) == a;
        bool by_split  = idempotent_components(a).idempotent;
        log.check(by_square == by_split, a.to_string());
        ++total;
        idem += by_square;
      }
    if (log.ok)
      log.note(std::to_string(total) + " elements of P_2..P_4, " + std::to_string(idem) + " idempotents");
    return {2, "idempotent characterization", log.ok, log.os.str()};
  }

  inline Outcome green_oracle() {
    Log             log;
    PartitionMonoid m(3);
    IdealOracle     oracle(m);
    auto            el    = m.elements();
    size_t          pairs = 0;
    for (auto const& a : el)
      for (auto const& b : el) {
        ++pairs;
        if (r_related(a, b) != oracle.r_related(a, b) || l_related(a, b) != oracle.l_related(a, b)
            || d_related(a, b) != oracle.d_related(a, b)) {
          log.check(false, a.to_string() + " vs " + b.to_string());
          return {3, "Green's relations vs ideal oracle", false, log.os.str()};
        }
      }
    log.note(std::to_string(pairs) + " pairs of P_3");
    return {3, "Green's relations vs ideal oracle", log.ok, log.os.str()};
  }

  inline Outcome top_class_counts() {
    Log log;
    for (int n = 3; n <= 5; ++n) {
      auto   d   = dclass_data(PartitionMonoid(n), n - 1);
      size_t c2  = n * (n - 1) / 2;
      size_t wp  = n + c2, we = n + 5 * c2;
      log.check(d.projections.size() == wp && d.idempotents.size() == we,
                "n=" + std::to_string(n) + ": (" + std::to_string(d.projections.size()) + ","
                    + std::to_string(d.idempotents.size()) + ")");
      log.note("n=" + std::to_string(n) + " (" + std::to_string(d.projections.size()) + ","
               + std::to_string(d.idempotents.size()) + ")");
    }
    return {4, "|P(n,n-1)| and |E(n,n-1)|", log.ok, log.os.str()};
  }

  inline Outcome gh_connectivity() {
    Log log;
    int count = 0;
    for (int n = 1; n <= 4; ++n)
      for (int r = 0; r <= n - 1; ++r) {
        auto d = dclass_data(PartitionMonoid(n), r);
        log.check(is_connected(build_gh_graph(d)), "D(" + std::to_string(n) + "," + std::to_string(r) + ")");
        ++count;
      }
    if (log.ok)
      log.note(std::to_string(count) + " classes connected");
    return {5, "Graham-Houghton connectivity", log.ok, log.os.str()};
  }

  inline Outcome ig_top_rank() {
    Log log;
    for (int n = 3; n <= 4; ++n) {
      auto d  = dclass_data(PartitionMonoid(n), n - 1);
      auto sq = enumerate_singular_squares(d);
      log.check(sq.squares.empty(), "n=" + std::to_string(n) + " has non-degenerate squares");
      auto   p = presn_ig(d, presentation_tree(d, Family::IG), sq);
      auto   v = identify(p);
      size_t k = static_cast<size_t>((n - 1) * (3 * n - 2) / 2);
      log.check(v.is_free_of_rank(k), "n=" + std::to_string(n) + " verdict " + v.to_string());
      log.check(detail::tietze_keeps_abelianization(p), "abelianization changed by Tietze");
      log.note("n=" + std::to_string(n) + " " + v.to_string());
    }
    return {6, "IG at rank n-1 is free", log.ok, log.os.str()};
  }

  inline Outcome pg_top_rank() {
    Log log;
    for (int n = 3; n <= 4; ++n) {
      auto   d = dclass_data(PartitionMonoid(n), n - 1);
      size_t k = static_cast<size_t>((n - 1) * (n - 2) / 2);
      for (Family f : {Family::PG, Family::PGLinked}) {
        auto p = build_presentation(d, f, presentation_tree(d, f));
        auto v = identify(p);
        log.check(v.is_free_of_rank(k), "n=" + std::to_string(n) + " " + family_name(f) + " " + v.to_string());
        log.check(detail::tietze_keeps_abelianization(p), "abelianization changed by Tietze");
        log.note("n=" + std::to_string(n) + " " + family_name(f) + " " + v.to_string());
      }
    }
    return {7, "PG at rank n-1 is free", log.ok, log.os.str()};
  }

  inline Outcome pg_symmetric(bool slow) {
    Log                              log;
    std::vector<std::pair<int, int>> cases{{3, 1}, {4, 1}, {4, 2}};
    if (slow)
      cases.push_back({5, 3});
    for (auto [n, r] : cases) {
      auto d = dclass_data(PartitionMonoid(n), r);
      auto p = build_presentation(d, Family::PG, t_pg(d));
      auto h = default_hints(d, Family::PG);
      auto v = identify(p, h);
      auto lc   = check_label_homomorphism(p, h.labels, r);
      auto want = factorial(r);
      std::string tag = "(" + std::to_string(n) + "," + std::to_string(r) + ")";
      log.check(v.is_finite_of_order(want), tag + " verdict " + v.to_string());
      log.check(lc.valid && lc.image_order == want, tag + " label homomorphism");
      log.check(detail::tietze_keeps_abelianization(p), tag + " abelianization changed by Tietze");
      log.note(tag + " order " + std::to_string(v.value) + ", labels onto S_" + std::to_string(r));
    }
    if (!slow)
      log.note("(5,3) skipped, set PMON_SLOW=1");
    return {8, "PG at middle ranks is S_r", log.ok, log.os.str()};
  }

  inline Outcome pg_rank_zero() {
    Log log;
    for (int n = 1; n <= 4; ++n) {
      auto d = dclass_data(PartitionMonoid(n), 0);
      auto p = build_presentation(d, Family::PGLinked, {});
      auto v = identify(p);
      log.check(v.is_finite_of_order(1), "n=" + std::to_string(n) + " " + v.to_string());
      log.check(detail::tietze_keeps_abelianization(p), "abelianization changed by Tietze");
    }
    if (log.ok)
      log.note("n=1..4 trivial via linked diamonds");
    return {9, "PG at rank 0 is trivial", log.ok, log.os.str()};
  }

  inline Outcome ig_rank_zero() {
    Log log;
    for (int n = 2; n <= 4; ++n) {
      auto d  = dclass_data(PartitionMonoid(n), 0);
      auto p  = presn_ig(d, t_rank0(d), enumerate_singular_squares(d));
      auto ts = tietze_simplify(p);
      auto v  = identify(p);
      log.check(ts.presentation.num_generators() == 1 && ts.presentation.relators.empty(),
                "n=" + std::to_string(n) + " simplifies to "
                    + std::to_string(ts.presentation.num_generators()) + " generators, "
                    + std::to_string(ts.presentation.relators.size()) + " relators");
      log.check(v.is_free_of_rank(1), "n=" + std::to_string(n) + " " + v.to_string());
      log.check(detail::tietze_keeps_abelianization(p), "abelianization changed by Tietze");
    }
    if (log.ok)
      log.note("n=2..4: one generator, no relators");
    return {10, "IG at rank 0 is Z", log.ok, log.os.str()};
  }

  inline Outcome ig_z_cross() {
    Log                              log;
    std::vector<std::pair<int, int>> cases{{3, 1}, {4, 1}, {4, 2}};
    for (auto [n, r] : cases) {
      std::string tag = "(" + std::to_string(n) + "," + std::to_string(r) + ")";
      auto        d   = dclass_data(PartitionMonoid(n), r);
      auto        p   = build_presentation(d, Family::IG, presentation_tree(d, Family::IG, "s"));
      auto        h   = default_hints(d, Family::IG);
      auto        ab  = abelianization(p);
      AbelianInvariants want_ab{1, {}};
      if (r >= 2)
        want_ab.torsion = {2};
      log.check(ab == want_ab, tag + " abelianization " + ab.to_string());
      auto lc = check_label_homomorphism(p, h.labels, r);
      log.check(lc.valid && lc.image_order == factorial(r), tag + " label homomorphism");
      log.check(detail::tietze_keeps_abelianization(p), tag + " abelianization changed by Tietze");
      // the least t in P_1 and the next one give the same quotient order
      std::vector<size_t> orders;
      for (size_t k = 0; k < 2; ++k) {
        auto t = projection_with_ntu(d, 1, k);
        if (!t)
          continue;
        GroupPresentation q = p;
        q.add_relator({letter(*t)});
        auto tc = todd_coxeter(tietze_simplify(q).presentation);
        log.check(tc.complete && tc.index == factorial(r),
                  tag + " quotient by t#" + std::to_string(k) + " order " + std::to_string(tc.index));
        orders.push_back(tc.index);
      }
      log.check(orders.size() == 2, tag + " needs two projections in P_1");
      auto v = identify(p, h);
      log.note(tag + " " + v.to_string() + " quotient order " + std::to_string(factorial(r)));
    }
    log.note("certification partial: the Hopfian step is not checked");
    return {11, "IG at middle ranks is Z x S_r (partial)", log.ok, log.os.str()};
  }

  inline Outcome brauer_rank_zero() {
    Log  log;
    auto d = dclass_data(BrauerMonoid(4), 0);
    log.check(d.projections.size() == 3 && d.idempotents.size() == 9,
              "|P_D|=" + std::to_string(d.projections.size()) + " |E_D|=" + std::to_string(d.idempotents.size()));
    long formula = (static_cast<long>(d.idempotents.size()) - 3 * static_cast<long>(d.projections.size())) / 2 + 1;
    log.check(formula == 1, "rank formula gives " + std::to_string(formula));
    for (Family f : {Family::PG, Family::PGLinked}) {
      auto p = build_presentation(d, f, presentation_tree(d, f));
      auto v = identify(p);
      log.check(v.is_free_of_rank(1), std::string(family_name(f)) + " " + v.to_string());
      log.check(detail::tietze_keeps_abelianization(p), "abelianization changed by Tietze");
    }
    if (log.ok)
      log.note("|P_D|=3 |E_D|=9, FREE(1)");
    return {12, "Brauer B_4 rank 0", log.ok, log.os.str()};
  }

  inline Outcome adjacency_graphs() {
    Log log;
    struct G {
      char const* name;
      char const* edges;
      size_t      want;
    };
    for (auto const& g : {G{"K3", "1 2\n2 3\n1 3\n", 1}, G{"C4", "1 2\n2 3\n3 4\n4 1\n", 1},
                          G{"path3", "1 2\n2 3\n", 0}}) {
      std::istringstream in(g.edges);
      auto               s = AdjacencySemigroup::parse_edge_list(in);
      size_t             k = s.num_edges() - s.num_vertices() + 1;
      log.check(k == g.want, std::string(g.name) + " k-n+1 = " + std::to_string(k));
      auto d = dclass_data(s, 1);
      for (Family f : {Family::PG, Family::PGLinked}) {
        auto p = build_presentation(d, f, presentation_tree(d, f));
        auto v = identify(p);
        log.check(v.is_free_of_rank(g.want), std::string(g.name) + " " + family_name(f) + " " + v.to_string());
        log.check(detail::tietze_keeps_abelianization(p), "abelianization changed by Tietze");
      }
      log.note(std::string(g.name) + " FREE(" + std::to_string(g.want) + ")");
    }
    return {13, "adjacency semigroups", log.ok, log.os.str()};
  }

  // Exhaustive over the D-classes of P_3.
  inline Outcome square_lemmas() {
    Log             log;
    PartitionMonoid m(3);
    auto            P     = projections(m);
    size_t          n_lnk = 0, n_pq = 0, n_prj = 0;
    for (int r = 0; r <= 3; ++r) {
      auto d  = dclass_data(m, r);
      auto sq = enumerate_singular_squares(d);
      auto const& pr = d.projections;
      // linked diamond -> two UD squares
      for (auto const& x : enumerate_linked_diamonds(d, P)) {
        auto const &s = pr[x.s], &u = pr[x.u], &v = pr[x.v], &w = pr[x.w];
        for (auto const& p : P) {
          if (!detail::is_linked_diamond(m, s, u, v, w, p))
            continue;
          ++n_lnk;
          Square<Partition> a{m.product(s, v), m.product(s, w), v, m.product(v, w)};
          Square<Partition> b{m.product(u, v), m.product(u, w), m.product(w, v), w};
          log.check(is_square(m, a) && is_ud_singular(m, a, p), "UD square from diamond (first)");
          log.check(is_square(m, b) && is_ud_singular(m, b, p), "UD square from diamond (second)");
        }
      }
      for (auto const& q : sq.squares) {
        auto sqr = sq.square(d, q);
        // pq-singularised -> p-singularised
        for (auto const& p : P)
          for (auto const& q2 : P) {
            if (!detail::ambient_friendly(m, p, q2) || !is_lr_singular(m, sqr, m.product(p, q2)))
              continue;
            ++n_pq;
            auto              ep = m.product(sqr.e, p), gp = m.product(sqr.g, p);
            Square<Partition> a{sqr.e, ep, sqr.g, gp};
            Square<Partition> b{sqr.f, ep, sqr.h, gp};
            log.check(is_square(m, a) && is_lr_singular(m, a, p), "p-singular square (first)");
            log.check(is_square(m, b) && is_lr_singular(m, b, p), "p-singular square (second)");
          }
        // projection-singularised -> two linked diamonds
        for (auto const& p : P) {
          if (!is_lr_singular(m, sqr, p))
            continue;
          auto s = m.product(sqr.e, m.star(sqr.e)), v = m.product(m.star(sqr.e), sqr.e);
          auto w = m.product(m.star(sqr.f), sqr.f), u = m.product(sqr.g, m.star(sqr.g));
          if (!(detail::ambient_friendly(m, s, v) && detail::ambient_friendly(m, s, w)
                && detail::ambient_friendly(m, u, v) && detail::ambient_friendly(m, u, w)))
            continue;
          if (m.product(s, v) != sqr.e || m.product(s, w) != sqr.f || m.product(u, v) != sqr.g
              || m.product(u, w) != sqr.h)
            continue;
          ++n_prj;
          log.check(detail::is_linked_diamond(m, s, v, s, w, p), "diamond (s,v;s,w)");
          log.check(detail::is_linked_diamond(m, u, v, u, w, p), "diamond (u,v;u,w)");
          log.check(is_square(m, {s, m.product(s, w), m.product(v, s), m.product(v, w)}),
                    "linked square from (s,v;s,w)");
          log.check(is_square(m, {u, m.product(u, w), m.product(v, u), m.product(v, w)}),
                    "linked square from (u,v;u,w)");
        }
      }
    }
    log.check(n_lnk > 0 && n_pq > 0 && n_prj > 0, "some lemma had no instances");
    log.note(std::to_string(n_lnk) + " linked, " + std::to_string(n_pq) + " pq-singular, "
             + std::to_string(n_prj) + " projection-singular instances in P_3");
    return {14, "square lemmas on P_3", log.ok, log.os.str()};
  }

  inline Outcome reducing_squares_and_labels() {
    Log    log;
    size_t reduced = 0, labelled = 0;
    for (auto [n, r] : std::vector<std::pair<int, int>>{{3, 1}, {4, 1}, {4, 2}}) {
      PartitionMonoid m(n);
      auto            d = dclass_data(m, r);
      for (auto const& e : d.idempotents) {
        auto l  = label(e);
        auto ls = label(involution(e));
        log.check(ls == l.inverse(), "label of e* for " + e.to_string());
        if (is_projection(e))
          log.check(l.is_identity(), "label of projection " + e.to_string());
        ++labelled;
        if (in_generating_set(e))
          continue;
        auto w = reducing_square(e);
        if (!w) {
          log.check(false, "no reducing square for " + e.to_string());
          continue;
        }
        auto const& q   = w->square;
        bool        ok  = q.h == e && is_nt_reducing(q) && is_idempotent(w->u);
        for (auto const& x : {q.e, q.f, q.g, q.h})
          ok = ok && is_idempotent(x) && rank(x) == r;
        ok = ok && is_singular_as(m, q, w->u, w->orientation);
        log.check(ok, "reducing square for " + e.to_string());
        ++reduced;
      }
    }
    log.note(std::to_string(reduced) + " elements outside F reduced, " + std::to_string(labelled)
             + " labels checked");
    return {15, "NT-reducing squares and labels", log.ok, log.os.str()};
  }

  inline Outcome non_singular_examples() {
    Log  log;
    auto sq = [](int n, char const* e, char const* f, char const* g, char const* h) {
      return Square<Partition>{Partition::parse(e, n), Partition::parse(f, n), Partition::parse(g, n),
                               Partition::parse(h, n)};
    };
    PartitionMonoid p2(2), p3(3);
    auto            q1 = sq(2, "1 2 1' 2'", "1 2 1'; 2'", "1 1' 2'; 2", "1 1'; 2; 2'");
    auto            q2 = sq(3, "1 3; 2 1' 2'; 3'", "1 3; 2 2' 3'; 1'", "2 1' 2'; 1; 3; 3'",
                            "2 2' 3'; 1; 3; 1'");
    log.check(is_square(p2, q1) && is_rectangular_band(p2, q1), "P_2 band square");
    log.check(find_singularizers(p2, witness_order(p2), q1).empty(), "P_2 singularizer found");
    log.check(is_square(p3, q2) && is_rectangular_band(p3, q2), "P_3 band square");
    log.check(find_singularizers(p3, witness_order(p3), q2).empty(), "P_3 singularizer found");
    auto q3 = sq(3, "1 1'; 2; 3; 2' 3'", "1 1' 3'; 2; 3; 2'", "1 1'; 2 3; 2' 3'", "1 1' 3'; 2 3; 2'");
    auto u  = Partition::parse("1 1'; 2 3 2' 3'", 3);
    bool hit = false;
    for (auto const& w : find_singularizers(p3, witness_order(p3), q3))
      hit = hit || (w.orientation == Orientation::UD && w.u == u);
    if (!hit) {
      auto any = find_singularizers(p3, witness_order(p3), q3);
      log.check(false, "P_3 UD witness " + u.to_string() + " not found: e3u=e3 "
                           + std::string(multiply(q3.e, u) == q3.e ? "holds" : "fails") + ", f3u="
                           + multiply(q3.f, u).to_string() + " vs f3=" + q3.f.to_string()
                           + ", singularizers in P_3: " + std::to_string(any.size()));
    }
    if (log.ok)
      log.note("two band squares unsingularised, UD witness " + u.to_string());
    return {16, "non-singular band squares", log.ok, log.os.str()};
  }

  inline Outcome tooling() {
    Log               log;
    GroupPresentation c3;
    c3.add_generator("a");
    c3.add_relator({1, 1, 1});
    auto r1 = todd_coxeter(c3);
    log.check(r1.complete && r1.index == 3, "<a|a^3> index " + std::to_string(r1.index));
    GroupPresentation s3;
    s3.add_generator("a");
    s3.add_generator("b");
    s3.add_relator({1, 1});
    s3.add_relator({2, 2});
    s3.add_relator({1, 2, 1, 2, 1, 2});
    auto r2 = todd_coxeter(s3);
    log.check(r2.complete && r2.index == 6, "S_3 index " + std::to_string(r2.index));
    auto inv = smith_invariants({{2, 0}, {0, 3}});
    log.check(inv == std::vector<BigInt>{1, 6}, "SNF diag(2,3)");
    if (log.ok)
      log.note("orders 3 and 6, SNF (1,6)");
    return {17, "coset enumeration and Smith form", log.ok, log.os.str()};
  }

  inline std::vector<std::function<Outcome()>> criteria(bool slow = false) {
    return {worked_product,
            idempotent_characterization,
            green_oracle,
            top_class_counts,
            gh_connectivity,
            ig_top_rank,
            pg_top_rank,
            [slow] { return pg_symmetric(slow); },
            pg_rank_zero,
            ig_rank_zero,
            ig_z_cross,
            brauer_rank_zero,
            adjacency_graphs,
            square_lemmas,
            reducing_squares_and_labels,
            non_singular_examples,
            tooling};
  }

  // Runs every criterion, one line each; returns the number of failures.
  inline int run_all(std::ostream& out, bool slow = false) {
    int  failures = 0;
    auto list     = criteria(slow);
    for (size_t k = 0; k < list.size(); ++k) {
      Outcome o;
      try {
        o = list[k]();
      } catch (std::exception const& e) {
        o.id     = static_cast<int>(k) + 1;
        o.title  = "criterion";
        o.pass   = false;
        o.detail = std::string("exception: ") + e.what();
      }
      failures += !o.pass;
      out << (o.pass ? "PASS" : "FAIL") << " [" << o.id << "] " << o.title;
      if (!o.detail.empty())
        out << ": " << o.detail;
      out << std::endl;
    }
    return failures;
  }

}  // namespace pmon::acceptance

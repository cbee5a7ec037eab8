#include <catch_amalgamated.hpp>

#include <random>
#include <set>
#include <sstream>

#include <pmon/pipeline.hpp>

using namespace pmon;

namespace {

  std::set<Word> relator_set(GroupPresentation const& p) {
    return {p.relators.begin(), p.relators.end()};
  }

  std::string const golden_p2_pg = R"(F := FreeGroup("a1","a2","a3","a4","a5","a6","a7");
a1 := F.avec[1];  # a[1 2 1' 2']
a2 := F.avec[2];  # a[1 2 1'; 2']
a3 := F.avec[3];  # a[1 2 2'; 1']
a4 := F.avec[4];  # a[1 1' 2'; 2]
a5 := F.avec[5];  # a[1 1'; 2; 2']
a6 := F.avec[6];  # a[1; 2 1' 2']
a7 := F.avec[7];  # a[1; 2 2'; 1']
rels := [ a1, a2, a3, a5, a7, a1*a1, a2*a4, a3*a6, a5*a5, a7*a7 ];
)";

  std::string const golden_p3_ig_simplified = R"(F := FreeGroup("a1");
a1 := F.avec[1];  # a[1; 2; 3 3'; 1' 2']
rels := [ ];
)";

}  // namespace

TEST_CASE("word helpers", "[present]") {
  CHECK(free_reduce({1, 2, -2, -1, 3}) == Word{3});
  CHECK(cyclic_reduce({-1, 2, 3, 1}) == Word{2, 3});
  CHECK(inverse({1, -2, 3}) == Word{-3, 2, -1});
  CHECK(letter(0) == 1);
  CHECK(letter(4, -1) == -5);
  CHECK(gen_of(-5) == 4);
  std::mt19937 rng(2);
  for (int k = 0; k < 200; ++k) {
    Word w;
    for (int i = 0; i < 6; ++i) {
      int g = static_cast<int>(rng() % 3) + 1;
      w.push_back(rng() % 2 ? g : -g);
    }
    w = cyclic_reduce(w);
    if (w.empty())
      continue;
    auto c = cyclic_canonical(w);
    for (size_t s = 0; s < w.size(); ++s) {
      Word rot(w.begin() + s, w.end());
      rot.insert(rot.end(), w.begin(), w.begin() + s);
      REQUIRE(cyclic_canonical(rot) == c);
      REQUIRE(cyclic_canonical(inverse(rot)) == c);
    }
  }
}

TEST_CASE("Tietze on small presentations", "[present]") {
  GroupPresentation p;
  p.add_generator("a");
  p.add_generator("b");
  p.add_relator({1});
  p.add_relator({1, -2});
  auto t = tietze_simplify(p);
  CHECK(t.presentation.num_generators() == 0);
  CHECK(t.presentation.relators.empty());
  CHECK(t.eliminated == 2);

  GroupPresentation q;
  q.add_generator("x");
  q.add_generator("y");
  q.add_relator({1, 2, -1, -2});
  auto tq = tietze_simplify(q);
  CHECK(tq.presentation.num_generators() == 2);
  CHECK(tq.presentation.relators.size() == 1);

  GroupPresentation e;
  e.add_generator("x");
  e.add_relator({1, -1});
  CHECK(e.relators.empty());
}

TEST_CASE("IG presentation of D(3,2)", "[present]") {
  auto d  = dclass_data(PartitionMonoid(3), 2);
  auto sq = enumerate_singular_squares(d);
  CHECK(sq.squares.empty());
  for (auto const& t : {spanning_tree_bfs(build_gh_graph(d)), projection_tree(d)}) {
    auto p = presn_ig(d, t, sq);
    CHECK(p.num_generators() == 18);
    CHECK(p.relators.size() == 11);
    auto s = tietze_simplify(p);
    CHECK(s.presentation.num_generators() == 7);
    CHECK(s.presentation.relators.empty());
    auto s2 = tietze_simplify(s.presentation);
    CHECK(to_cas_text(s2.presentation) == to_cas_text(s.presentation));
  }
  auto bad = spanning_tree_bfs(build_gh_graph(d));
  bad.edges.pop_back();
  CHECK_THROWS_AS(presn_ig(d, bad, sq), Error);
}

TEST_CASE("cycle rank is the free rank without squares", "[present]") {
  for (int n = 2; n <= 4; ++n) {
    auto d = dclass_data(PartitionMonoid(n), n - 1);
    auto g = build_gh_graph(d);
    auto p = presn_ig(d, spanning_tree_bfs(g), enumerate_singular_squares(d));
    auto s = tietze_simplify(p).presentation;
    CHECK(s.relators.empty());
    CHECK(s.num_generators() == g.num_edges() - g.left - g.right + 1);
    CHECK(s.num_generators() == (n - 1) * (3 * n - 2) / 2);
  }
}

TEST_CASE("Tietze is idempotent on built presentations", "[present]") {
  for (auto [n, r] : std::vector<std::pair<int, int>>{{3, 1}, {3, 0}, {4, 2}}) {
    auto d = dclass_data(PartitionMonoid(n), r);
    for (Family f : {Family::IG, Family::PG, Family::PGLinked, Family::PGTriangles}) {
      auto p  = build_presentation(d, f, presentation_tree(d, f));
      auto s1 = tietze_simplify(p).presentation;
      auto s2 = tietze_simplify(s1).presentation;
      CAPTURE(n, r, family_name(f));
      CHECK(to_cas_text(s1) == to_cas_text(s2));
      CHECK(abelianization(p) == abelianization(s1));
    }
  }
}

TEST_CASE("square relators are non-degenerate", "[present]") {
  auto d  = dclass_data(PartitionMonoid(3), 1);
  auto t  = presentation_tree(d, Family::IG);
  auto sq = enumerate_singular_squares(d);
  auto p  = presn_ig(d, t, sq);
  CHECK(p.relators.size() <= t.edges.size() + sq.squares.size());
  for (size_t k = t.edges.size(); k < p.relators.size(); ++k) {
    auto const& w = p.relators[k];
    REQUIRE(w.size() == 4);
    std::set<int> g;
    for (int l : w)
      g.insert(gen_of(l));
    REQUIRE(g.size() == 4);
  }
}

TEST_CASE("PG squares add exactly the inverse relators", "[present]") {
  for (auto [n, r] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {4, 2}}) {
    auto d  = dclass_data(PartitionMonoid(n), r);
    auto t  = presentation_tree(d, Family::PG);
    auto sq = enumerate_singular_squares(d);
    auto ig = relator_set(presn_ig(d, t, sq));
    auto pg = relator_set(presn_pg_squares(d, t, sq));
    std::set<Word> inv;
    for (size_t e = 0; e < d.idempotents.size(); ++e) {
      int es = *d.idempotent_index(involution(d.idempotents[e]));
      if (static_cast<int>(e) <= es)
        inv.insert({letter(static_cast<int>(e)), letter(es)});
    }
    std::set<Word> diff;
    std::set_difference(pg.begin(), pg.end(), ig.begin(), ig.end(), std::inserter(diff, diff.end()));
    CHECK(std::includes(pg.begin(), pg.end(), ig.begin(), ig.end()));
    CHECK(diff == inv);
  }
  auto d  = dclass_data(PartitionMonoid(3), 1);
  auto bt = spanning_tree_bfs(build_gh_graph(d));
  CHECK_THROWS_AS(presn_pg_squares(d, bt, enumerate_singular_squares(d)), Error);
}

TEST_CASE("linked and squares presentations agree on D(3,1)", "[present]") {
  auto d  = dclass_data(PartitionMonoid(3), 1);
  auto sq = tietze_simplify(build_presentation(d, Family::PG, t_pg(d))).presentation;
  auto lk = tietze_simplify(build_presentation(d, Family::PGLinked, {})).presentation;
  auto tr = tietze_simplify(build_presentation(d, Family::PGTriangles, {})).presentation;
  auto a = todd_coxeter(sq), b = todd_coxeter(lk), c = todd_coxeter(tr);
  REQUIRE(a.complete);
  REQUIRE(b.complete);
  REQUIRE(c.complete);
  CHECK(a.index == b.index);
  CHECK(a.index == c.index);
  CHECK(a.index == 1);
}

TEST_CASE("linked presentation without diamonds is free", "[present]") {
  std::vector<std::pair<std::string, std::string>> graphs{{"K3", "1 2\n2 3\n1 3\n"},
                                                          {"C4", "1 2\n2 3\n3 4\n4 1\n"}};
  for (auto const& [name, edges] : graphs) {
    std::istringstream in(edges);
    auto               d = dclass_data(AdjacencySemigroup::parse_edge_list(in), 1);
    CAPTURE(name);
    long want = (static_cast<long>(d.idempotents.size()) - 3 * static_cast<long>(d.projections.size())) / 2 + 1;
    auto p    = tietze_simplify(build_presentation(d, Family::PGLinked, {})).presentation;
    CHECK(p.relators.empty());
    CHECK(p.num_generators() == want);
  }
  auto b = dclass_data(BrauerMonoid(4), 0);
  auto p = tietze_simplify(build_presentation(b, Family::PGLinked, {})).presentation;
  CHECK(p.relators.empty());
  CHECK(p.num_generators() == 1);
}

TEST_CASE("friendliness tree validation", "[present]") {
  auto d    = dclass_data(PartitionMonoid(3), 1);
  auto tree = friendliness_tree(d);
  CHECK_NOTHROW(check_friendliness_tree(d, tree));
  auto shorter = tree;
  shorter.pop_back();
  CHECK_THROWS_AS(check_friendliness_tree(d, shorter), Error);
  auto looped = tree;
  looped.back() = {looped.back().second, looped.back().second};
  CHECK_THROWS_AS(check_friendliness_tree(d, looped), Error);
  CHECK_THROWS_AS(presn_pg_linked(d, enumerate_linked_diamonds(d), shorter), Error);
}

TEST_CASE("semigroup presentation documents", "[present]") {
  PartitionMonoid p2(2);
  auto            ig = emit_ig(p2);
  CHECK(ig.generators.size() == 12);
  CHECK(ig.relations.size() == ig.relation_family.size());
  auto pg = emit_pg(p2);
  auto P  = projections(p2);
  CHECK(std::count(pg.relation_family.begin(), pg.relation_family.end(), "conjugate")
        == static_cast<long>(P.size() * P.size()));
  CHECK(std::count(pg.relation_family.begin(), pg.relation_family.end(), "idempotent")
        == static_cast<long>(P.size()));
  auto rig      = emit_ig(p2, true);
  auto E        = idempotents(p2);
  long sandwich = 0;
  for (auto const& e : E)
    for (auto const& f : E)
      sandwich += static_cast<long>(sandwich_set(p2, E, e, f).size());
  CHECK(std::count(rig.relation_family.begin(), rig.relation_family.end(), "sandwich") == sandwich);
  auto pge = emit_pg_over_idempotents(p2);
  CHECK(pge.family == "PG/E");
  CHECK(std::count(pge.relation_family.begin(), pge.relation_family.end(), "projection")
        == static_cast<long>(P.size() * P.size()));
  CHECK(ig.to_text().rfind("# IG: 12 generators", 0) == 0);

  PartitionMonoid p3(3);
  for (auto const& e : idempotents(p3))
    for (auto const& f : idempotents(p3))
      if (is_basic_pair(p3, e, f)) {
        REQUIRE(is_idempotent(e * f));
        REQUIRE(is_idempotent(f * e));
      }
}

TEST_CASE("CAS and JSON output", "[present]") {
  auto d2 = dclass_data(PartitionMonoid(2), 1);
  auto p2 = build_presentation(d2, Family::PG, presentation_tree(d2, Family::PG));
  CHECK(to_cas_text(p2) == golden_p2_pg);
  auto d3 = dclass_data(PartitionMonoid(3), 1);
  auto s3 = tietze_simplify(build_presentation(d3, Family::IG, presentation_tree(d3, Family::IG)));
  CHECK(to_cas_text(s3.presentation) == golden_p3_ig_simplified);

  auto j    = to_json(p2);
  auto back = presentation_from_json(nlohmann::json::parse(j.dump()));
  CHECK(back.generators == p2.generators);
  CHECK(back.relators == p2.relators);
  j["relators"][0][0] = {99, 1};
  CHECK_THROWS_AS(presentation_from_json(j), Error);
  CHECK_THROWS_AS(presentation_from_json({{"format", "other"}}), Error);
}

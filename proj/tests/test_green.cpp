#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include <pmon/green.hpp>

using namespace pmon;

TEST_CASE("Green's relations agree with ideal oracle", "[green]") {
  PartitionMonoid m(3);
  IdealOracle     oracle(m);
  auto            el = m.elements();
  std::mt19937    rng(5);
  std::uniform_int_distribution<size_t> pick(0, el.size() - 1);
  for (int k = 0; k < 20000; ++k) {
    auto const &a = el[pick(rng)], &b = el[pick(rng)];
    REQUIRE(r_related(a, b) == oracle.r_related(a, b));
    REQUIRE(l_related(a, b) == oracle.l_related(a, b));
    REQUIRE(d_related(a, b) == oracle.d_related(a, b));
  }
  // d_related on P_n is equality of rank
  for (auto const& a : PartitionMonoid(2).elements())
    for (auto const& b : PartitionMonoid(2).elements())
      REQUIRE(d_related(a, b) == (rank(a) == rank(b)));
}

TEST_CASE("generic relations on T_3", "[green]") {
  TransformationMonoid t(3);
  IdealOracle          oracle(t);
  for (auto const& a : t.elements())
    for (auto const& b : t.elements()) {
      REQUIRE(r_related(t, a, b) == oracle.r_related(a, b));
      REQUIRE(l_related(t, a, b) == oracle.l_related(a, b));
    }
}

TEST_CASE("full domain and equal kernels give R", "[green]") {
  auto p = Partition::parse("1 2 1' 2'; 3 3'");
  auto q = Partition::parse("1 2 1'; 3 3'; 2'");
  REQUIRE(is_projection(p));
  CHECK_FALSE(is_projection(q));
  CHECK(d_projection(q) == p);
  CHECK(rank(p) == rank(q));
  CHECK(r_related(p, q));
}

TEST_CASE("D-class counts", "[green]") {
  auto d43 = dclass_data(PartitionMonoid(4), 3);
  CHECK(d43.projections.size() == 10);
  CHECK(d43.idempotents.size() == 34);
  auto d32 = dclass_data(PartitionMonoid(3), 2);
  CHECK(d32.projections.size() == 6);
  CHECK(d32.idempotents.size() == 18);
  auto d20 = dclass_data(PartitionMonoid(2), 0);
  CHECK(d20.elements.size() == 4);
  CHECK(d20.idempotents.size() == 4);
  auto b40 = dclass_data(BrauerMonoid(4), 0);
  CHECK(b40.projections.size() == 3);
  CHECK(b40.idempotents.size() == 9);
  CHECK_THROWS_AS(dclass_data(BrauerMonoid(4), 1), Error);
}

TEST_CASE("class structure invariants", "[green]") {
  for (int n = 1; n <= 4; ++n)
    for (int r = 0; r <= n; ++r) {
      PartitionMonoid m(n);
      auto            d = dclass_data(m, r);
      CAPTURE(n, r);
      // (p,q) -> pq is a bijection from friendly pairs onto E_D
      std::set<Partition> prods;
      size_t              friendly = 0;
      int const           np       = static_cast<int>(d.projections.size());
      for (int a = 0; a < np; ++a)
        for (int b = 0; b < np; ++b)
          if (d.friendly(a, b)) {
            ++friendly;
            auto e = *h_class_idempotent(d, d.projections[a], d.projections[b]);
            REQUIRE(e == m.product(d.projections[a], d.projections[b]));
            prods.insert(e);
          }
      CHECK(friendly == d.idempotents.size());
      CHECK(prods.size() == d.idempotents.size());
      for (int a = 0; a < np; ++a)
        CHECK(*h_class_idempotent(d, d.projections[a], d.projections[a]) == d.projections[a]);
      // aa* and a*a are the row and column projections of a
      for (size_t k = 0; k < d.elements.size(); k += 5) {
        auto const& a = d.elements[k];
        REQUIRE(d.projections[d.row_of(a)] == m.product(a, m.star(a)));
        REQUIRE(d.projections[d.col_of(a)] == m.product(m.star(a), a));
      }
      // strata partition E_D
      size_t total = 0;
      for (auto const& [k, v] : d.strata) {
        total += v.size();
        for (int e : v) {
          REQUIRE(ntu(d.idempotents[e]) == k.first);
          REQUIRE(ntd(d.idempotents[e]) == k.second);
        }
      }
      CHECK(total == d.idempotents.size());
      if (r >= 1 && r < n) {
        size_t transf = 0;
        for (auto const& e : d.idempotents)
          transf += ntu(e) == 0 && static_cast<int>(dom(e).size()) == n && coker(e) == Equivalence::trivial(n);
        size_t stratum = d.strata.count({0, n - r}) ? d.strata.at({0, n - r}).size() : 0;
        CHECK(stratum == transf);
      }
    }
}

TEST_CASE("group H-classes by brute force", "[green]") {
  PartitionMonoid m(3);
  for (int r = 0; r <= 3; ++r) {
    auto   d      = dclass_data(m, r);
    size_t groups = 0;
    // an H-class is a group iff it contains an idempotent
    std::set<std::pair<int, int>> seen;
    for (auto const& a : d.elements)
      if (m.product(a, a) == a)
        seen.insert({d.row_of(a), d.col_of(a)});
    groups = seen.size();
    CHECK(groups == d.idempotents.size());
  }
}

TEST_CASE("rank-0 class is a rectangular band", "[green]") {
  for (int n = 1; n <= 4; ++n) {
    auto      d  = dclass_data(PartitionMonoid(n), 0);
    int const np = static_cast<int>(d.projections.size());
    for (int a = 0; a < np; ++a)
      for (int b = 0; b < np; ++b)
        REQUIRE(d.friendly(a, b));
  }
}

TEST_CASE("sandwich sets", "[green]") {
  PartitionMonoid m(3);
  auto            E = idempotents(m);
  for (auto const& e : E)
    for (auto const& f : E) {
      auto s = sandwich_set(m, E, e, f);
      REQUIRE_FALSE(s.empty());
      if (e == f)
        REQUIRE(std::find(s.begin(), s.end(), e) != s.end());
    }
  CHECK_THROWS_AS(sandwich_set(m, E, Partition::parse("1 2'; 2 1'; 3 3'"), E[0]), Error);

  // second pass: re-evaluate the defining equations directly on P_4 pairs
  PartitionMonoid                       m4(4);
  auto                                  E4 = idempotents(m4);
  std::mt19937                          rng(17);
  std::uniform_int_distribution<size_t> pick(0, E4.size() - 1);
  for (int k = 0; k < 100; ++k) {
    auto const &e = E4[pick(rng)], &f = E4[pick(rng)];
    auto        s = sandwich_set(m4, E4, e, f);
    std::vector<Partition> again;
    for (auto const& h : E4)
      if (e * h * f == e * f && f * h * e == h)
        again.push_back(h);
    REQUIRE(s == again);
    REQUIRE_FALSE(s.empty());
  }
}

TEST_CASE("JSON round trip", "[green]") {
  PartitionMonoid m(3);
  for (int r = 0; r <= 3; ++r) {
    auto d    = dclass_data(m, r);
    auto text = to_json(d).dump();
    auto back = dclass_from_json(m, nlohmann::json::parse(text));
    CHECK(to_json(back).dump() == text);
    CHECK(back.idempotents == d.idempotents);
    CHECK(back.projections == d.projections);
  }
  auto d = dclass_data(m, 1);
  auto j = to_json(d);
  j["rank"] = 2;
  CHECK_THROWS(dclass_from_json(m, j));
}

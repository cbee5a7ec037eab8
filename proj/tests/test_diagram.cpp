#include <catch_amalgamated.hpp>

#include <map>
#include <random>
#include <set>

#include <pmon/monoid.hpp>
#include <pmon/partition.hpp>

using namespace pmon;

namespace {

  Partition const fig_a = Partition::parse("1 4; 2 3 4' 5'; 5 6; 1' 2' 6'; 3'");
  Partition const fig_b = Partition::parse("1 2; 3 4 1'; 5 5' 6'; 6; 2' 3'; 4'");

  // Naive product: connected components of the 3n-vertex product graph by
  // repeated relaxation, no union-find.  Returns (blocks of ab, floating count).
  std::pair<Partition, int> naive_product(Partition const& a, Partition const& b) {
    int const  n = a.degree();
    auto const A = a.blocks(), B = b.blocks();
    // vertex ids: top 0..n-1, middle n..2n-1, bottom 2n..3n-1
    std::vector<int> comp(3 * n);
    for (int i = 0; i < 3 * n; ++i)
      comp[i] = i;
    auto vid_a = [n](Point x) { return x > 0 ? x - 1 : n + (-x) - 1; };
    auto vid_b = [n](Point x) { return x > 0 ? n + x - 1 : 2 * n + (-x) - 1; };
    std::vector<std::vector<int>> edges;
    for (auto const& blk : A) {
      std::vector<int> v;
      for (Point x : blk)
        v.push_back(vid_a(x));
      edges.push_back(v);
    }
    for (auto const& blk : B) {
      std::vector<int> v;
      for (Point x : blk)
        v.push_back(vid_b(x));
      edges.push_back(v);
    }
    for (bool changed = true; changed;) {
      changed = false;
      for (auto const& v : edges) {
        int m = comp[v[0]];
        for (int x : v)
          m = std::min(m, comp[x]);
        for (int x : v)
          if (comp[x] != m) {
            comp[x] = m;
            changed = true;
          }
      }
    }
    std::map<int, std::vector<Point>> blocks;
    for (int i = 0; i < n; ++i)
      blocks[comp[i]].push_back(i + 1);
    for (int i = 0; i < n; ++i)
      blocks[comp[2 * n + i]].push_back(-(i + 1));
    std::set<int> floating;
    for (int i = n; i < 2 * n; ++i)
      if (!blocks.count(comp[i]))
        floating.insert(comp[i]);
    std::vector<std::vector<Point>> out;
    for (auto& [k, v] : blocks)
      out.push_back(v);
    return {Partition::from_blocks(n, out), static_cast<int>(floating.size())};
  }

  Partition all_singletons(int n) {
    std::vector<std::vector<Point>> b;
    for (int i = 1; i <= n; ++i) {
      b.push_back({i});
      b.push_back({-i});
    }
    return Partition::from_blocks(n, b);
  }

  std::vector<std::vector<int>> classes_of(Equivalence const& e) {
    return e.classes();
  }

}  // namespace

TEST_CASE("from_blocks", "[diagram]") {
  auto a = Partition::from_blocks(6, {{1, 4}, {2, 3, -4, -5}, {5, 6}, {-1, -2, -6}, {-3}});
  CHECK(a == fig_a);
  CHECK(Partition::from_blocks(1, {{1, -1}}) == Partition::identity(1));
  auto z = Partition::from_blocks(3, {{1}, {2}, {3}, {-1}, {-2}, {-3}});
  CHECK(rank(z) == 0);
  CHECK(z.num_blocks() == 6);
}

TEST_CASE("from_blocks errors name the point", "[diagram]") {
  auto msg = [](auto f) {
    try {
      f();
    } catch (ValidationError const& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK_THAT(msg([] { Partition::from_blocks(2, {{1, 2}, {2, -1, -2}}); }),
             Catch::Matchers::ContainsSubstring("point 2 "));
  CHECK_THAT(msg([] { Partition::from_blocks(2, {{1, 2}, {-1}}); }),
             Catch::Matchers::ContainsSubstring("point 2'"));
  CHECK_THAT(msg([] { Partition::from_blocks(2, {{1, 2, 3}, {-1, -2}}); }),
             Catch::Matchers::ContainsSubstring("point 3 "));
  CHECK_THROWS_AS(Partition::parse("1 x; 1'"), ValidationError);
  CHECK_THROWS_AS(Partition::parse("1 0'"), ValidationError);
}

TEST_CASE("text round trip", "[diagram]") {
  for (auto const& a : PartitionMonoid(3).elements())
    REQUIRE(Partition::parse(a.to_string(), 3) == a);
  CHECK(Partition::parse(fig_a.to_string()) == fig_a);
}

TEST_CASE("element counts", "[diagram]") {
  CHECK(PartitionMonoid(2).elements().size() == 15);
  CHECK(PartitionMonoid(3).elements().size() == 203);
  CHECK(PartitionMonoid(4).elements().size() == 4140);
  CHECK(TransformationMonoid(3).elements().size() == 27);
  std::istringstream k3("1 2\n2 3\n1 3\n");
  CHECK(AdjacencySemigroup::parse_edge_list(k3).elements().size() == 10);
  auto el = PartitionMonoid(3).elements();
  CHECK(std::set<Partition>(el.begin(), el.end()).size() == el.size());
}

TEST_CASE("worked product", "[diagram]") {
  auto ab = Partition::parse("1 4; 2 3 1' 5' 6'; 5 6; 2' 3'; 4'");
  CHECK(fig_a * fig_b == ab);
  auto pr = multiply_with_floats(fig_a, fig_b);
  CHECK(pr.part == ab);
  CHECK(pr.floats == 1);
  CHECK(pr.floating == std::vector<std::vector<int>>{{1, 2, 6}});
  CHECK(naive_product(fig_a, fig_b) == std::pair{ab, 1});
}

TEST_CASE("floating components", "[diagram]") {
  auto id = Partition::identity(4);
  CHECK(multiply_with_floats(id, id).floats == 0);
  auto z = all_singletons(2);
  CHECK(multiply_with_floats(z, z).floats == 2);
  CHECK_THROWS_AS(multiply(Partition::identity(2), Partition::identity(3)), Error);
}

TEST_CASE("product agrees with naive oracle", "[diagram]") {
  auto el = PartitionMonoid(2).elements();
  for (auto const& a : el)
    for (auto const& b : el) {
      auto pr = multiply_with_floats(a, b);
      REQUIRE(naive_product(a, b) == std::pair{pr.part, pr.floats});
    }
  std::mt19937 rng(7);
  auto         el3 = PartitionMonoid(3).elements();
  std::uniform_int_distribution<size_t> pick(0, el3.size() - 1);
  for (int k = 0; k < 5000; ++k) {
    auto const &a = el3[pick(rng)], &b = el3[pick(rng)];
    auto        pr = multiply_with_floats(a, b);
    REQUIRE(naive_product(a, b) == std::pair{pr.part, pr.floats});
  }
}

TEST_CASE("associativity", "[diagram]") {
  auto el = PartitionMonoid(2).elements();
  for (auto const& a : el)
    for (auto const& b : el)
      for (auto const& c : el)
        REQUIRE((a * b) * c == a * (b * c));
  std::mt19937 rng(11);
  for (int n : {3, 4}) {
    auto                                  els = PartitionMonoid(n).elements();
    std::uniform_int_distribution<size_t> pick(0, els.size() - 1);
    for (int k = 0; k < 10000; ++k) {
      auto const &a = els[pick(rng)], &b = els[pick(rng)], &c = els[pick(rng)];
      REQUIRE((a * b) * c == a * (b * c));
    }
  }
  for (auto const& a : PartitionMonoid(3).elements())
    REQUIRE(Partition::identity(3) * a == a);
}

TEST_CASE("twisted product", "[diagram]") {
  auto x = twisted_multiply({0, fig_a}, {0, fig_b});
  CHECK(x.shift == 1);
  CHECK(x.part == fig_a * fig_b);
  auto id = Partition::identity(3);
  CHECK(twisted_multiply({3, id}, {-3, id}) == TwistedElement{0, id});
}

TEST_CASE("involution", "[diagram]") {
  CHECK(involution(fig_a) == Partition::parse("1' 4'; 2' 3' 4 5; 5' 6'; 1 2 6; 3"));
  CHECK(involution(Partition::identity(5)) == Partition::identity(5));
  auto el = PartitionMonoid(3).elements();
  for (auto const& a : el) {
    REQUIRE(involution(involution(a)) == a);
    REQUIRE(a * involution(a) * a == a);
  }
  std::mt19937                          rng(3);
  std::uniform_int_distribution<size_t> pick(0, el.size() - 1);
  for (int k = 0; k < 5000; ++k) {
    auto const &a = el[pick(rng)], &b = el[pick(rng)];
    REQUIRE(involution(a * b) == involution(b) * involution(a));
  }
}

TEST_CASE("rank and non-transversal counts", "[diagram]") {
  CHECK(rank(fig_a) == 1);
  auto id = Partition::identity(4);
  CHECK(rank(id) == 4);
  CHECK(ntu(id) == 0);
  CHECK(ntd(id) == 0);
  for (int n = 1; n <= 4; ++n) {
    auto z = all_singletons(n);
    CHECK(rank(z) == 0);
    CHECK(ntu(z) == n);
    CHECK(ntd(z) == n);
  }
  CHECK(dom(fig_a) == std::vector<int>{2, 3});
  CHECK(codom(fig_a) == std::vector<int>{4, 5});
}

TEST_CASE("idempotent decomposition", "[diagram]") {
  CHECK(is_idempotent(fig_a));
  CHECK(is_idempotent(fig_b));
  CHECK_FALSE(is_idempotent(fig_a * fig_b));
  CHECK_FALSE(idempotent_components(fig_a * fig_b).idempotent);
  auto dec = idempotent_components(fig_b);
  REQUIRE(dec.idempotent);
  std::vector<std::vector<int>> cls;
  for (auto const& c : dec.components)
    cls.push_back(c.points);
  CHECK(cls == std::vector<std::vector<int>>{{1, 2, 3, 4}, {5, 6}});
  for (auto const& c : dec.components)
    CHECK(c.rank <= 1);

  size_t idem = 0;
  for (auto const& a : PartitionMonoid(2).elements())
    idem += a * a == a;
  CHECK(idem == 12);
  for (auto const& a : PartitionMonoid(3).elements())
    REQUIRE((a * a == a) == idempotent_components(a).idempotent);
}

TEST_CASE("projections", "[diagram]") {
  CHECK(is_projection(Partition::identity(3)));
  auto p = d_projection(fig_a);
  CHECK(is_projection(p));
  CHECK(dom(p) == std::vector<int>{1, 2, 3, 4, 5, 6});
  CHECK(classes_of(ker(p)) == std::vector<std::vector<int>>{{1, 4}, {2, 3}, {5, 6}});
  CHECK(classes_of(ker(r_projection(fig_a))) == std::vector<std::vector<int>>{{1, 2, 6}, {3}, {4, 5}});
  PartitionMonoid m(3);
  auto            P = projections(m);
  for (auto const& a : m.elements()) {
    REQUIRE(is_projection(a * involution(a)));
    for (size_t k = 0; k < P.size(); k += 7)
      REQUIRE(is_projection(involution(a) * P[k] * a));
  }
}

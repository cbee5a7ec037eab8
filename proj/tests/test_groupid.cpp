#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include <pmon/pipeline.hpp>

using namespace pmon;

namespace {

  using Matrix = std::vector<std::vector<BigInt>>;

  Matrix multiply(Matrix const& a, Matrix const& b) {
    Matrix c(a.size(), std::vector<BigInt>(b[0].size()));
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t k = 0; k < b.size(); ++k)
        for (size_t j = 0; j < b[0].size(); ++j)
          c[i][j] += a[i][k] * b[k][j];
    return c;
  }

  // product of random elementary matrices, determinant ±1
  Matrix unimodular(size_t n, std::mt19937& rng) {
    Matrix u(n, std::vector<BigInt>(n));
    for (size_t i = 0; i < n; ++i)
      u[i][i] = 1;
    for (int step = 0; step < 25; ++step) {
      size_t i = rng() % n, j = rng() % n;
      if (i == j) {
        u[i].swap(u[(i + 1) % n]);
        continue;
      }
      int c = static_cast<int>(rng() % 7) - 3;
      for (size_t k = 0; k < n; ++k)
        u[i][k] += c * u[j][k];
    }
    return u;
  }

  GroupPresentation make(int gens, std::vector<Word> rels) {
    GroupPresentation p;
    for (int g = 0; g < gens; ++g)
      p.add_generator("g" + std::to_string(g + 1));
    for (auto const& r : rels)
      p.add_relator(r);
    return p;
  }

}  // namespace

TEST_CASE("Smith invariants", "[groupid]") {
  CHECK(smith_invariants({{2, 0}, {0, 3}}) == std::vector<BigInt>{1, 6});
  CHECK(smith_invariants({{0, 0, 0}, {0, 0, 0}}).empty());
  CHECK(smith_invariants({{4, 6}, {6, 4}}) == std::vector<BigInt>{2, 10});

  std::mt19937 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<BigInt> diag{1, 2, 6, 12, 0};
    if (trial % 3 == 1)
      diag = {1, 1, 3, 0, 0};
    if (trial % 3 == 2)
      diag = {2, 4, 4, 8, 16};
    Matrix d(5, std::vector<BigInt>(5));
    for (size_t i = 0; i < 5; ++i)
      d[i][i] = diag[i];
    auto m    = multiply(multiply(unimodular(5, rng), d), unimodular(5, rng));
    auto want = diag;
    std::erase(want, BigInt(0));
    REQUIRE(smith_invariants(m) == want);
  }
}

TEST_CASE("abelianization", "[groupid]") {
  auto c3 = abelianization(make(1, {{1, 1, 1}}));
  CHECK(c3.free_rank == 0);
  CHECK(c3.torsion == std::vector<BigInt>{3});
  CHECK(c3.to_string() == "Z_3");
  CHECK(abelianization(make(2, {})).to_string() == "Z^2");
  CHECK(abelianization(make(1, {{1}})).to_string() == "1");

  auto d31 = dclass_data(PartitionMonoid(3), 1);
  auto a31 = abelianization(build_presentation(d31, Family::IG, presentation_tree(d31, Family::IG)));
  CHECK(a31 == AbelianInvariants{1, {}});
  auto d42 = dclass_data(PartitionMonoid(4), 2);
  auto a42 = abelianization(build_presentation(d42, Family::IG, presentation_tree(d42, Family::IG)));
  CHECK(a42 == AbelianInvariants{1, {2}});
  CHECK(a42.to_string() == "Z x Z_2");
}

TEST_CASE("coset enumeration", "[groupid]") {
  CHECK(todd_coxeter(make(1, {{1, 1, 1}})).index == 3);
  auto s3 = make(2, {{1, 1}, {2, 2}, {1, 2, 1, 2, 1, 2}});
  auto r  = todd_coxeter(s3);
  CHECK(r.complete);
  CHECK(r.index == 6);
  // A_5 and the quaternion group
  CHECK(todd_coxeter(make(2, {{1, 1}, {2, 2, 2}, {1, 2, 1, 2, 1, 2, 1, 2, 1, 2}})).index == 60);
  CHECK(todd_coxeter(make(2, {{1, 1, 1, 1}, {1, 1, -2, -2}, {-2, 1, 2, 1}})).index == 8);
  CHECK_FALSE(todd_coxeter(make(1, {}), 1000).complete);
  CHECK_FALSE(todd_coxeter(make(2, {{1, 1}}), 1000).complete);
  CHECK(todd_coxeter(make(0, {})).index == 1);
}

TEST_CASE("coset enumeration is invariant under shuffles", "[groupid]") {
  auto         base = make(3, {{1, 1}, {2, 2}, {3, 3}, {1, 2, 1, 2, 1, 2}, {2, 3, 2, 3, 2, 3}, {1, 3, 1, 3}});
  auto         want = todd_coxeter(base).index;
  std::mt19937 rng(31);
  CHECK(want == 24);
  for (int k = 0; k < 10; ++k) {
    auto p = base;
    std::shuffle(p.relators.begin(), p.relators.end(), rng);
    std::vector<int> perm{0, 1, 2};
    std::shuffle(perm.begin(), perm.end(), rng);
    for (auto& w : p.relators)
      for (int& l : w)
        l = letter(perm[gen_of(l)], l > 0 ? 1 : -1);
    REQUIRE(todd_coxeter(p).index == want);
    // extra relators never increase the order
    auto q = p;
    q.add_relator({letter(perm[0]), letter(perm[1])});
    auto rq = todd_coxeter(q);
    REQUIRE(rq.complete);
    REQUIRE(rq.index <= want);
  }
}

TEST_CASE("permutation labels of generators", "[groupid]") {
  CHECK(generated_order({Perm({1, 0, 2}), Perm({1, 2, 0})}, 3) == 6);
  CHECK(generated_order({}, 3) == 1);

  auto d42 = dclass_data(PartitionMonoid(4), 2);
  auto p   = build_presentation(d42, Family::PG, t_pg(d42));
  auto lab = generator_labels(d42, Family::PG);
  auto lc  = check_label_homomorphism(p, lab, 2);
  CHECK(lc.valid);
  CHECK(lc.image_order == 2);

  auto bad = lab;
  auto it  = std::find_if(bad.begin(), bad.end(), [](Perm const& x) { return !x.is_identity(); });
  REQUIRE(it != bad.end());
  *it = Perm::identity(2);
  CHECK_FALSE(check_label_homomorphism(p, bad, 2).valid);

  auto d32 = dclass_data(PartitionMonoid(3), 2);
  auto ig  = build_presentation(d32, Family::IG, presentation_tree(d32, Family::IG));
  std::vector<Perm> ones(ig.num_generators(), Perm::identity(2));
  auto              li = check_label_homomorphism(ig, ones, 2);
  CHECK(li.valid);
  CHECK(li.image_order == 1);
  CHECK_THROWS_AS(check_label_homomorphism(ig, {}, 2), Error);
}

TEST_CASE("verdicts", "[groupid]") {
  for (int n = 2; n <= 3; ++n) {
    auto d = dclass_data(PartitionMonoid(n), 0);
    CHECK(identify(build_presentation(d, Family::PGLinked, {})).is_finite_of_order(1));
    auto v = identify(build_presentation(d, Family::IG, presentation_tree(d, Family::IG)));
    CHECK(v.kind == Verdict::Kind::Free);
    CHECK(v.value == 1);
    CHECK(describe(v) == "Z (free rank 1)");
  }
  auto d32 = dclass_data(PartitionMonoid(3), 2);
  CHECK(identify(build_presentation(d32, Family::IG, presentation_tree(d32, Family::IG))).to_string()
        == "FREE(7)");

  auto d42 = dclass_data(PartitionMonoid(4), 2);
  auto pg  = identify(build_presentation(d42, Family::PG, t_pg(d42)), default_hints(d42, Family::PG));
  CHECK(pg.to_string() == "FINITE(2)");
  CHECK(pg.group == "S_2");
  CHECK(describe(pg) == "S_2 (order 2, certified)");

  auto ig = identify(build_presentation(d42, Family::IG, presentation_tree(d42, Family::IG)),
                     default_hints(d42, Family::IG));
  CHECK(ig.to_string() == "Z_CROSS_FINITE(2, partial)");
  CHECK(ig.group == "Z x S_2");
  CHECK(ig.partial);

  auto unknown = identify(make(2, {{1, 1}}));
  CHECK(unknown.kind == Verdict::Kind::Unknown);
  CHECK(unknown.abelian.to_string() == "Z x Z_2");
  CHECK_FALSE(unknown.evidence.empty());

  auto j = to_json(ig);
  CHECK(j["format"] == "pmon.verdict");
  CHECK(j["verdict"] == "Z_CROSS_FINITE(2, partial)");
  CHECK(j["abelianization"]["torsion"] == nlohmann::json::array({"2"}));

  CHECK(identify(make(0, {})).is_free_of_rank(0));
  CHECK(describe(identify(make(1, {{1}}))) == "trivial");
}

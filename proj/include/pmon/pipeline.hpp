#pragma once

#include <string>
#include <type_traits>
#include <vector>

#include "biorder.hpp"
#include "ghgraph.hpp"
#include "green.hpp"
#include "groupid.hpp"
#include "present.hpp"

namespace pmon {

  enum class Family { IG, PG, PGLinked, PGTriangles };

  inline Family parse_family(std::string const& s) {
    if (s == "ig")
      return Family::IG;
    if (s == "pg")
      return Family::PG;
    if (s == "pg-linked")
      return Family::PGLinked;
    if (s == "pg-triangles")
      return Family::PGTriangles;
    throw ValidationError("unknown presentation family \"" + s + "\"");
  }

  inline char const* family_name(Family f) {
    switch (f) {
      case Family::IG: return "ig";
      case Family::PG: return "pg";
      case Family::PGLinked: return "pg-linked";
      case Family::PGTriangles: return "pg-triangles";
    }
    return "?";
  }

  template <typename S>
  constexpr bool is_partition_monoid = std::is_same_v<S, PartitionMonoid>;

  // 1 ≤ r ≤ n-2 in P_n, where the symmetric group appears
  template <FiniteSemigroup S>
  bool is_middle_rank(DClassData<S> const& d) {
    if constexpr (is_partition_monoid<S>)
      return d.rank >= 1 && d.rank <= d.semigroup.degree() - 2;
    return false;
  }

  // idempotent index of the k-th projection (canonical order) with NTu = ntu_value
  inline std::optional<int> projection_with_ntu(PnClass const& d, int ntu_value, size_t k = 0) {
    for (auto const& p : d.projections)
      if (ntu(p) == ntu_value && k-- == 0)
        return d.idempotent_index(p);
    return std::nullopt;
  }

  // Tree names: "default", "bfs", "proj", "s", "pg", "rank0".
  template <FiniteSemigroup S>
  TreeSet presentation_tree(DClassData<S> const& d, Family fam, std::string const& name = "default") {
    auto g = build_gh_graph(d);
    if (name == "bfs")
      return spanning_tree_bfs(g);
    if (name == "proj") {
      if constexpr (S::has_star)
        return projection_tree(d);
      throw ValidationError("tree \"proj\" needs an involution");
    }
    if constexpr (is_partition_monoid<S>) {
      if (name == "s") {
        auto s = projection_with_ntu(d, 0);
        if (!s || !is_middle_rank(d))
          throw ValidationError("tree \"s\" needs 1 <= rank <= n-2");
        return t_s(d, d.idempotents[*s]);
      }
      if (name == "pg")
        return t_pg(d);
      if (name == "rank0")
        return t_rank0(d);
      if (name == "default") {
        if (fam == Family::IG) {
          if (d.rank == 0 && d.semigroup.degree() >= 2)
            return t_rank0(d);
          if (is_middle_rank(d))
            return presentation_tree(d, fam, "s");
          return spanning_tree_bfs(g);
        }
        return is_middle_rank(d) ? t_pg(d) : projection_tree(d);
      }
    } else if (name == "default") {
      if constexpr (S::has_star)
        if (fam != Family::IG)
          return projection_tree(d);
      return spanning_tree_bfs(g);
    }
    throw ValidationError("unknown tree \"" + name + "\"");
  }

  template <FiniteSemigroup S>
  GroupPresentation build_presentation(DClassData<S> const& d, Family fam, TreeSet const& t,
                                       int threads = 1) {
    if (fam == Family::IG)
      return presn_ig(d, t, enumerate_singular_squares(d, threads));
    if constexpr (S::has_star) {
      if (fam == Family::PG)
        return presn_pg_squares(d, t, enumerate_singular_squares(d, threads));
      auto diamonds = enumerate_linked_diamonds(d);
      if (fam == Family::PGLinked)
        return presn_pg_linked(d, diamonds, friendliness_tree(d));
      return presn_pg_triangles(d, linked_triangles(diamonds), friendliness_tree(d));
    }
    throw ValidationError(std::string("family ") + family_name(fam) + " needs an involution");
  }

  // λ(e) for every generator a_e, or λ(pq) for every generator a_{p,q}
  inline std::vector<Perm> generator_labels(PnClass const& d, Family fam) {
    std::vector<Perm> out;
    if (fam == Family::IG || fam == Family::PG) {
      for (auto const& e : d.idempotents)
        out.push_back(label(e));
      return out;
    }
    int const np = static_cast<int>(d.projections.size());
    for (int a = 0; a < np; ++a)
      for (int b = 0; b < np; ++b)
        if (d.friendly(a, b))
          out.push_back(label(d.product(d.projections[a], d.projections[b])));
    return out;
  }

  template <FiniteSemigroup S>
  IdentifyHints default_hints(DClassData<S> const& d, Family fam, size_t max_cosets = 1'000'000) {
    IdentifyHints h;
    h.max_cosets = max_cosets;
    if constexpr (is_partition_monoid<S>) {
      if (is_middle_rank(d)) {
        h.rank   = d.rank;
        h.labels = generator_labels(d, fam);
        if (fam == Family::IG)
          h.kill_generators = {*projection_with_ntu(d, 1)};
      }
    }
    return h;
  }

  // Human-readable summary: "Z (free rank 1)", "trivial", "S_2 (order 2, certified)".
  inline std::string describe(Verdict const& v) {
    switch (v.kind) {
      case Verdict::Kind::Free:
        if (v.value == 0)
          return "trivial";
        return free_group_name(v.value) + " (free rank " + std::to_string(v.value) + ")";
      case Verdict::Kind::Finite:
        if (v.value == 1)
          return "trivial";
        if (v.group.rfind("S_", 0) == 0)
          return v.group + " (order " + std::to_string(v.value) + ", certified)";
        return "finite group of order " + std::to_string(v.value);
      case Verdict::Kind::ZCrossFinite:
        return v.group + " (partial: Z factor from abelianization, quotient of order "
               + std::to_string(v.value) + ")";
      default:
        return "unknown";
    }
  }

}  // namespace pmon

// pmon: maximal subgroups of free idempotent- and projection-generated
// semigroups over diagram monoids, from the command line.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "pmon/acceptance.hpp"
#include "pmon/pipeline.hpp"

namespace fs = std::filesystem;
using namespace pmon;

namespace {

  enum Exit { kOk = 0, kAcceptanceFailure = 1, kUsage = 2 };

  struct RunConfig {
    std::string monoid = "Pn";
    int         n      = 3;
    int         rank   = -1;
    std::string graph_file;
    std::string family = "ig";
    std::string tree   = "default";
    std::string format = "text";
    std::string cache_dir;
    std::string output;
    size_t      max_cosets = 1'000'000;
    int         threads    = 1;
    bool        simplify   = false;
    bool        diamonds   = false;
    bool        slow       = false;
    std::string semigroup;

    void validate() const {
      if (monoid != "Pn" && monoid != "Brauer" && monoid != "Tn" && monoid != "Adjacency")
        throw ValidationError("unknown monoid \"" + monoid + "\"");
      if (monoid == "Adjacency" && graph_file.empty())
        throw ValidationError("--monoid Adjacency needs --graph FILE");
      if (monoid != "Adjacency" && (n < 1 || n > kDefaultDegreeCap))
        throw ValidationError("--n must lie in 1.." + std::to_string(kDefaultDegreeCap));
      if (threads < 1)
        throw ValidationError("--threads must be positive");
    }
    int effective_rank() const {
      if (rank >= 0)
        return rank;
      if (monoid == "Adjacency")
        return 1;
      throw ValidationError("--rank is required");
    }
  };

  MonoidHandle make_monoid(RunConfig const& c) {
    if (c.monoid == "Pn")
      return PartitionMonoid(c.n);
    if (c.monoid == "Brauer")
      return BrauerMonoid(c.n);
    if (c.monoid == "Tn")
      return TransformationMonoid(c.n);
    return AdjacencySemigroup::from_file(c.graph_file);
  }

  std::string cache_root(RunConfig const& c) {
    if (char const* env = std::getenv("PMON_CACHE_DIR"); env && *env)
      return env;
    return c.cache_dir;
  }

  // D-class construction, through the cache when one is configured
  template <FiniteSemigroup S>
  DClassData<S> load_dclass(S const& s, RunConfig const& c, int r) {
    std::string root = cache_root(c);
    // adjacency names do not identify the graph, so those are never cached
    if (root.empty() || std::string(S::kind) == "Adjacency")
      return dclass_data(s, r);
    fs::path file = fs::path(root)
                    / (std::string(S::kind) + "-n" + std::to_string(c.n) + "-r" + std::to_string(r) + "-v"
                       + std::to_string(kFormatVersion) + ".json");
    if (fs::exists(file)) {
      std::ifstream in(file);
      try {
        return dclass_from_json(s, nlohmann::json::parse(in));
      } catch (std::exception const& e) {
        std::cerr << "pmon: ignoring cache file " << file << ": " << e.what() << "\n";
      }
    }
    auto d = dclass_data(s, r);
    fs::create_directories(root);
    std::ofstream(file) << to_json(d).dump() << "\n";
    return d;
  }

  struct Sink {
    std::ofstream file;
    std::ostream* os = &std::cout;
    explicit Sink(std::string const& path) {
      if (!path.empty()) {
        file.open(path);
        if (!file)
          throw ValidationError("cannot write " + path);
        os = &file;
      }
    }
    std::ostream& operator*() {
      return *os;
    }
  };

  template <FiniteSemigroup S>
  int cmd_stats(S const& s, RunConfig const& c) {
    auto d = load_dclass(s, c, c.effective_rank());
    auto g = build_gh_graph(d);
    Sink out(c.output);
    if (c.format == "json") {
      auto j                 = to_json(d);
      j["gh_connected"]      = is_connected(g);
      j["num_elements"]      = d.elements.size();
      *out << j.dump(2) << "\n";
      return kOk;
    }
    *out << s.name() << " rank " << d.rank << "\n";
    *out << "|D| = " << d.elements.size() << "\n";
    *out << "R-classes = " << d.num_rows() << ", L-classes = " << d.num_cols() << "\n";
    if constexpr (S::has_star)
      *out << "P_D = " << d.projections.size() << "\n";
    *out << "E_D = " << d.idempotents.size() << "\n";
    if (!d.strata.empty()) {
      *out << "strata (NTu, NTd): count\n";
      for (auto const& [k, v] : d.strata)
        *out << "  (" << k.first << ", " << k.second << "): " << v.size() << "\n";
    }
    *out << "GH graph: " << g.left << " + " << g.right << " vertices, " << g.num_edges() << " edges, "
         << (is_connected(g) ? "connected" : "disconnected") << "\n";
    return kOk;
  }

  template <FiniteSemigroup S>
  int cmd_presentation(S const& s, RunConfig const& c) {
    Sink out(c.output);
    if (!c.semigroup.empty()) {
      SemigroupPresentationDoc doc;
      if (c.semigroup == "ig")
        doc = emit_ig(s);
      else if (c.semigroup == "rig")
        doc = emit_ig(s, true);
      else if constexpr (S::has_star) {
        if (c.semigroup == "pg")
          doc = emit_pg(s);
        else if (c.semigroup == "pg-e")
          doc = emit_pg_over_idempotents(s);
        else
          throw ValidationError("unknown semigroup presentation \"" + c.semigroup + "\"");
      } else {
        throw ValidationError("semigroup presentation \"" + c.semigroup + "\" needs an involution");
      }
      *out << doc.to_text();
      return kOk;
    }
    auto d   = load_dclass(s, c, c.effective_rank());
    auto fam = parse_family(c.family);
    auto p   = build_presentation(d, fam, presentation_tree(d, fam, c.tree), c.threads);
    if (c.simplify)
      p = tietze_simplify(p).presentation;
    if (c.format == "json")
      *out << to_json(p).dump(2) << "\n";
    else
      *out << to_cas_text(p);
    return kOk;
  }

  template <FiniteSemigroup S>
  int cmd_identify(S const& s, RunConfig const& c) {
    auto d   = load_dclass(s, c, c.effective_rank());
    auto fam = parse_family(c.family);
    auto p   = build_presentation(d, fam, presentation_tree(d, fam, c.tree), c.threads);
    auto v   = identify(p, default_hints(d, fam, c.max_cosets));
    Sink out(c.output);
    if (c.format == "json") {
      auto j      = to_json(v);
      j["monoid"] = s.name();
      j["rank"]   = d.rank;
      j["family"] = family_name(fam);
      *out << j.dump(2) << "\n";
      return kOk;
    }
    *out << describe(v) << "\n";
    *out << "verdict: " << v.to_string() << "\n";
    for (auto const& e : v.evidence)
      *out << "  " << e << "\n";
    return kOk;
  }

  template <FiniteSemigroup S>
  int cmd_squares(S const& s, RunConfig const& c) {
    auto d = load_dclass(s, c, c.effective_rank());
    Sink out(c.output);
    if (c.diamonds) {
      if constexpr (S::has_star) {
        auto ds = enumerate_linked_diamonds(d);
        if (c.format == "json") {
          *out << to_json(d, ds).dump(2) << "\n";
        } else {
          for (auto const& x : ds)
            if (!x.degenerate())
              *out << "(" << s.format(d.projections[x.s]) << " | " << s.format(d.projections[x.u]) << " ; "
                   << s.format(d.projections[x.v]) << " | " << s.format(d.projections[x.w])
                   << ")  p = " << s.format(x.p) << "\n";
        }
        return kOk;
      }
      throw ValidationError("linked diamonds need an involution");
    }
    auto ss = enumerate_singular_squares(d, c.threads);
    if (c.format == "json") {
      *out << to_json(d, ss).dump(2) << "\n";
      return kOk;
    }
    for (auto const& q : ss.squares)
      *out << "[" << s.format(d.idempotents[q.e]) << " | " << s.format(d.idempotents[q.f]) << " ; "
           << s.format(d.idempotents[q.g]) << " | " << s.format(d.idempotents[q.h]) << "]  "
           << orientation_name(q.orientation) << " by " << s.format(ss.witnesses[q.u]) << "\n";
    *out << ss.squares.size() << " non-degenerate singular squares\n";
    return kOk;
  }

  template <FiniteSemigroup S>
  int cmd_graph(S const& s, RunConfig const& c) {
    auto                   d = load_dclass(s, c, c.effective_rank());
    auto                   g = build_gh_graph(d);
    std::optional<TreeSet> t;
    if (c.tree != "none") {
      if constexpr (is_partition_monoid<S>) {
        if (c.tree == "lex")
          t = t_lex(d);
        else if (c.tree == "fd")
          t = t_fd(d);
        else if (c.tree == "fc")
          t = t_fc(d);
      }
      if (!t)
        t = presentation_tree(d, parse_family(c.family), c.tree);
      if (!verify_spanning_tree(g, *t))
        throw Error("tree \"" + c.tree + "\" does not span its scope");
    }
    Sink out(c.output);
    if (c.format == "json" && t)
      *out << to_json(d, *t).dump(2) << "\n";
    else
      *out << to_dot(d, g, t ? &*t : nullptr);
    return kOk;
  }

  int cmd_verify(RunConfig const& c) {
    Sink out(c.output);
    int  failures = acceptance::run_all(*out, c.slow);
    *out << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
    return failures == 0 ? kOk : kAcceptanceFailure;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App  app{"pmon: maximal subgroups of free idempotent- and projection-generated semigroups"};
  RunConfig c;
  app.require_subcommand(1);

  auto add_monoid = [&](CLI::App* sub) {
    sub->add_option("--monoid", c.monoid, "Pn, Brauer, Tn or Adjacency")->capture_default_str();
    sub->add_option("--n", c.n, "degree")->capture_default_str();
    sub->add_option("--rank", c.rank, "rank of the D-class");
    sub->add_option("--graph", c.graph_file, "edge list for --monoid Adjacency");
    sub->add_option("--cache-dir", c.cache_dir, "D-class cache (PMON_CACHE_DIR overrides)");
    sub->add_option("--threads", c.threads, "worker threads for square enumeration")->capture_default_str();
    sub->add_option("--format", c.format, "text, json, cas or dot")->capture_default_str();
    sub->add_option("-o,--output", c.output, "write to a file instead of stdout");
  };

  auto* stats = app.add_subcommand("stats", "D-class sizes, strata and GH connectivity");
  add_monoid(stats);
  auto* pres = app.add_subcommand("presentation", "group presentation of a maximal subgroup");
  add_monoid(pres);
  pres->add_option("--family", c.family, "ig, pg, pg-linked or pg-triangles")->capture_default_str();
  pres->add_option("--tree", c.tree, "default, bfs, proj, s, pg or rank0")->capture_default_str();
  pres->add_flag("--simplify", c.simplify, "apply Tietze simplification");
  pres->add_option("--semigroup", c.semigroup, "emit the ig, rig, pg or pg-e semigroup presentation instead");
  auto* ident = app.add_subcommand("identify", "identify the maximal subgroup");
  add_monoid(ident);
  ident->add_option("--family", c.family, "ig, pg, pg-linked or pg-triangles")->capture_default_str();
  ident->add_option("--tree", c.tree, "spanning tree")->capture_default_str();
  ident->add_option("--max-cosets", c.max_cosets, "coset enumeration limit")->capture_default_str();
  auto* squares = app.add_subcommand("squares", "singular squares or linked diamonds of a D-class");
  add_monoid(squares);
  squares->add_flag("--diamonds", c.diamonds, "list linked diamonds instead");
  auto* graph = app.add_subcommand("graph", "Graham-Houghton graph as DOT");
  add_monoid(graph);
  graph->add_option("--tree", c.tree, "none, lex, fd, fc, s, pg, rank0, bfs or proj")->capture_default_str();
  graph->add_option("--family", c.family, "family used to pick the default tree")->capture_default_str();
  auto* verify = app.add_subcommand("verify", "run the acceptance criteria");
  verify->add_flag("--slow", c.slow, "include the slow P_5 case");
  verify->add_option("-o,--output", c.output, "write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (verify->parsed())
      return cmd_verify(c);
    c.validate();
    auto m = make_monoid(c);
    return std::visit(
        [&](auto const& s) -> int {
          if (stats->parsed())
            return cmd_stats(s, c);
          if (pres->parsed())
            return cmd_presentation(s, c);
          if (ident->parsed())
            return cmd_identify(s, c);
          if (squares->parsed())
            return cmd_squares(s, c);
          return cmd_graph(s, c);
        },
        m);
  } catch (std::exception const& e) {
    std::cerr << "pmon: " << e.what() << "\n";
    return kUsage;
  }
}

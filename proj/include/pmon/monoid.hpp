#pragma once

#include <algorithm>
#include <concepts>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "partition.hpp"

namespace pmon {

  // Finite semigroups consumed by the structural modules.  Elements are value
  // types with a total order and a hash; r_key/l_key return a canonical
  // representative of the R-/L-class, which for *-semigroups is the unique
  // projection aa*, resp. a*a.
  template <typename S>
  concept FiniteSemigroup = requires(S const& s, typename S::element_type const& x) {
    { s.elements() } -> std::same_as<std::vector<typename S::element_type>>;
    { s.product(x, x) } -> std::same_as<typename S::element_type>;
    { s.rank_of(x) } -> std::same_as<int>;
    { s.r_key(x) } -> std::same_as<typename S::element_type>;
    { s.l_key(x) } -> std::same_as<typename S::element_type>;
    { s.format(x) } -> std::same_as<std::string>;
    { s.name() } -> std::same_as<std::string>;
    { S::has_star } -> std::convertible_to<bool>;
  };

  namespace detail {
    // Restricted growth strings of length len, i.e. canonical labelings.
    template <typename F>
    void for_each_rgs(int len, F&& f) {
      std::vector<int> v(len, 0), mx(len, 0);
      if (len == 0)
        return;
      while (true) {
        f(v);
        int i = len - 1;
        while (i > 0 && v[i] == mx[i - 1] + 1)
          --i;
        if (i == 0)
          return;
        ++v[i];
        mx[i] = std::max(mx[i - 1], v[i]);
        for (int j = i + 1; j < len; ++j) {
          v[j]  = 0;
          mx[j] = mx[i];
        }
      }
    }

    inline void check_cap(int n, int cap) {
      if (n < 1)
        throw ValidationError("degree must be positive");
      if (n > cap)
        throw ValidationError("degree " + std::to_string(n) + " exceeds the cap "
                              + std::to_string(cap));
    }

    // Projection with the same domain and kernel as a, i.e. aa*.
    inline Partition upper_projection(Partition const& a) {
      int              n = a.degree();
      auto             s = block_shape(a);
      std::vector<int> v(2 * n);
      for (int i = 0; i < n; ++i) {
        int b = a.label(i);
        v[i]  = b;
        // non-transversal upper blocks get a separate lower copy
        v[n + i] = s.has_lower[b] ? b : b + 2 * kMaxDegree;
      }
      return Partition::from_labels(n, v);
    }
  }  // namespace detail

  class PartitionMonoid {
   public:
    using element_type              = Partition;
    static constexpr bool has_star  = true;
    static constexpr char kind[]    = "Pn";

    explicit PartitionMonoid(int n, int cap = kDefaultDegreeCap) : _n(n) {
      detail::check_cap(n, cap);
    }

    int degree() const noexcept {
      return _n;
    }
    std::string name() const {
      return "P" + std::to_string(_n);
    }

    std::vector<Partition> elements() const {
      std::vector<Partition> out;
      detail::for_each_rgs(2 * _n, [&](std::vector<int> const& v) {
        out.push_back(Partition::from_labels(_n, v));
      });
      std::sort(out.begin(), out.end());
      return out;
    }
    bool contains(Partition const& a) const {
      return a.degree() == _n;
    }

    Partition product(Partition const& a, Partition const& b) const {
      return multiply(a, b);
    }
    Partition star(Partition const& a) const {
      return involution(a);
    }
    Partition identity() const {
      return Partition::identity(_n);
    }
    int rank_of(Partition const& a) const {
      return rank(a);
    }
    Partition r_key(Partition const& a) const {
      return detail::upper_projection(a);
    }
    Partition l_key(Partition const& a) const {
      return involution(detail::upper_projection(involution(a)));
    }
    std::string format(Partition const& a) const {
      return a.to_string();
    }
    Partition parse(std::string const& s) const {
      auto p = Partition::parse(s, _n);
      return p;
    }
    std::vector<int> ranks() const {
      std::vector<int> r(_n + 1);
      std::iota(r.begin(), r.end(), 0);
      return r;
    }

   private:
    int _n;
  };

  class BrauerMonoid {
   public:
    using element_type             = Partition;
    static constexpr bool has_star = true;
    static constexpr char kind[]   = "Brauer";

    explicit BrauerMonoid(int n, int cap = kDefaultDegreeCap) : _n(n) {
      detail::check_cap(n, cap);
    }
    int degree() const noexcept {
      return _n;
    }
    std::string name() const {
      return "B" + std::to_string(_n);
    }

    std::vector<Partition> elements() const {
      std::vector<Partition> out;
      std::vector<int>       lab(2 * _n, -1);
      std::function<void(int)> rec = [&](int block) {
        int i = 0;
        while (i < 2 * _n && lab[i] != -1)
          ++i;
        if (i == 2 * _n) {
          out.push_back(Partition::from_labels(_n, lab));
          return;
        }
        lab[i] = block;
        for (int j = i + 1; j < 2 * _n; ++j)
          if (lab[j] == -1) {
            lab[j] = block;
            rec(block + 1);
            lab[j] = -1;
          }
        lab[i] = -1;
      };
      rec(0);
      std::sort(out.begin(), out.end());
      return out;
    }
    bool contains(Partition const& a) const {
      if (a.degree() != _n)
        return false;
      std::vector<int> sz(a.num_blocks());
      for (int i = 0; i < 2 * _n; ++i)
        ++sz[a.label(i)];
      return std::all_of(sz.begin(), sz.end(), [](int s) { return s == 2; });
    }
    Partition product(Partition const& a, Partition const& b) const {
      return multiply(a, b);
    }
    Partition star(Partition const& a) const {
      return involution(a);
    }
    Partition identity() const {
      return Partition::identity(_n);
    }
    int rank_of(Partition const& a) const {
      return rank(a);
    }
    // Brauer diagrams share Green's structure with P_n restricted to them, but
    // aa* is the key that stays inside the monoid.
    Partition r_key(Partition const& a) const {
      return multiply(a, involution(a));
    }
    Partition l_key(Partition const& a) const {
      return multiply(involution(a), a);
    }
    std::string format(Partition const& a) const {
      return a.to_string();
    }
    Partition parse(std::string const& s) const {
      auto p = Partition::parse(s, _n);
      if (!contains(p))
        throw ValidationError("\"" + s + "\" is not a Brauer diagram");
      return p;
    }
    std::vector<int> ranks() const {
      std::vector<int> r;
      for (int k = _n % 2; k <= _n; k += 2)
        r.push_back(k);
      return r;
    }

   private:
    int _n;
  };

  // T_n inside P_n: partitions with full domain and trivial cokernel.
  class TransformationMonoid {
   public:
    using element_type             = Partition;
    static constexpr bool has_star = false;
    static constexpr char kind[]   = "Tn";

    explicit TransformationMonoid(int n, int cap = kDefaultDegreeCap) : _n(n) {
      detail::check_cap(n, cap);
    }
    int degree() const noexcept {
      return _n;
    }
    std::string name() const {
      return "T" + std::to_string(_n);
    }

    // image of each point, 1-based
    static Partition from_images(std::vector<int> const& img) {
      int              n = static_cast<int>(img.size());
      std::vector<int> v(2 * n);
      for (int i = 0; i < n; ++i) {
        if (img[i] < 1 || img[i] > n)
          throw ValidationError("image " + std::to_string(img[i]) + " out of range");
        v[i] = img[i] - 1;
      }
      for (int j = 0; j < n; ++j)
        v[n + j] = j;
      return Partition::from_labels(n, v);
    }
    static std::vector<int> images(Partition const& a) {
      int              n = a.degree();
      std::vector<int> img(n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (a.label(n + j) == a.label(i))
            img[i] = j + 1;
      return img;
    }

    std::vector<Partition> elements() const {
      std::vector<Partition> out;
      std::vector<int>       img(_n, 1);
      while (true) {
        out.push_back(from_images(img));
        int i = _n - 1;
        while (i >= 0 && img[i] == _n)
          img[i--] = 1;
        if (i < 0)
          break;
        ++img[i];
      }
      std::sort(out.begin(), out.end());
      return out;
    }
    bool contains(Partition const& a) const {
      return a.degree() == _n && dom(a).size() == static_cast<size_t>(_n)
             && coker(a).num_classes() == _n;
    }
    Partition product(Partition const& a, Partition const& b) const {
      return multiply(a, b);
    }
    Partition identity() const {
      return Partition::identity(_n);
    }
    int rank_of(Partition const& a) const {
      return rank(a);
    }
    // R-classes of T_n are kernels, L-classes are images.
    Partition r_key(Partition const& a) const {
      return identity_of(ker(a));
    }
    Partition l_key(Partition const& a) const {
      auto             cd = codom(a);
      std::vector<int> v(2 * _n);
      for (int i = 0; i < 2 * _n; ++i)
        v[i] = i;
      for (int c : cd)
        v[_n + c - 1] = c - 1;
      return Partition::from_labels(_n, v);
    }
    std::string format(Partition const& a) const {
      return a.to_string();
    }
    Partition parse(std::string const& s) const {
      auto p = Partition::parse(s, _n);
      if (!contains(p))
        throw ValidationError("\"" + s + "\" is not a transformation");
      return p;
    }
    std::vector<int> ranks() const {
      std::vector<int> r;
      for (int k = 1; k <= _n; ++k)
        r.push_back(k);
      return r;
    }

   private:
    int _n;
  };

  struct AdjElem {
    int  p = -1, q = -1;  // both -1 for the zero
    bool is_zero() const noexcept {
      return p < 0;
    }
    bool operator==(AdjElem const&) const = default;
    auto operator<=>(AdjElem const&) const = default;
    uint64_t hash() const noexcept {
      return (static_cast<uint64_t>(p + 1) << 32) ^ static_cast<uint64_t>(q + 1);
    }
  };

  // Elements (p,q) for vertices p,q plus 0; (p,q)(r,s) = (p,s) when q ~ r.
  class AdjacencySemigroup {
   public:
    using element_type             = AdjElem;
    static constexpr bool has_star = true;
    static constexpr char kind[]   = "Adjacency";

    AdjacencySemigroup(std::vector<std::string> vertices,
                       std::vector<std::pair<int, int>> const& edges)
        : _names(std::move(vertices)), _adj(_names.size(), std::vector<bool>(_names.size())) {
      int k = static_cast<int>(_names.size());
      if (k == 0)
        throw ValidationError("adjacency graph has no vertices");
      for (int v = 0; v < k; ++v)
        _adj[v][v] = true;
      for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= k || v >= k)
          throw ValidationError("edge endpoint out of range");
        _adj[u][v] = _adj[v][u] = true;
      }
      std::vector<int> seen(k, 0), stack{0};
      seen[0] = 1;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < k; ++v)
          if (_adj[u][v] && !seen[v]) {
            seen[v] = 1;
            stack.push_back(v);
          }
      }
      if (std::find(seen.begin(), seen.end(), 0) != seen.end())
        throw ValidationError("adjacency graph is not connected");
    }

    // "u v" per line; loops are implicit, '#' starts a comment.  A line with
    // a single token declares an isolated vertex.
    static AdjacencySemigroup parse_edge_list(std::istream& in) {
      std::vector<std::string>         names;
      std::map<std::string, int>       index;
      std::vector<std::pair<int, int>> edges;
      auto id = [&](std::string const& s) {
        auto it = index.find(s);
        if (it != index.end())
          return it->second;
        index[s] = static_cast<int>(names.size());
        names.push_back(s);
        return static_cast<int>(names.size()) - 1;
      };
      std::string line;
      int         lineno = 0;
      while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos)
          line.erase(h);
        std::stringstream        ss(line);
        std::vector<std::string> tok;
        std::string              t;
        while (ss >> t)
          tok.push_back(t);
        if (tok.empty())
          continue;
        if (tok.size() > 2)
          throw ValidationError("edge list line " + std::to_string(lineno)
                                + ": expected \"u v\"");
        int u = id(tok[0]);
        if (tok.size() == 2)
          edges.emplace_back(u, id(tok[1]));
      }
      return AdjacencySemigroup(std::move(names), edges);
    }
    static AdjacencySemigroup from_file(std::string const& path) {
      std::ifstream in(path);
      if (!in)
        throw ValidationError("cannot open edge list " + path);
      return parse_edge_list(in);
    }

    int num_vertices() const noexcept {
      return static_cast<int>(_names.size());
    }
    // simple edges, i.e. unordered pairs u ≠ v
    int num_edges() const {
      int k = 0;
      for (int u = 0; u < num_vertices(); ++u)
        for (int v = u + 1; v < num_vertices(); ++v)
          k += _adj[u][v];
      return k;
    }
    bool adjacent(int u, int v) const {
      return _adj[u][v];
    }
    std::string name() const {
      return "A(" + std::to_string(num_vertices()) + "," + std::to_string(num_edges()) + ")";
    }

    std::vector<AdjElem> elements() const {
      std::vector<AdjElem> out{AdjElem{}};
      for (int p = 0; p < num_vertices(); ++p)
        for (int q = 0; q < num_vertices(); ++q)
          out.push_back({p, q});
      return out;
    }
    AdjElem product(AdjElem const& x, AdjElem const& y) const {
      if (x.is_zero() || y.is_zero() || !_adj[x.q][y.p])
        return {};
      return {x.p, y.q};
    }
    AdjElem star(AdjElem const& x) const {
      return x.is_zero() ? x : AdjElem{x.q, x.p};
    }
    int rank_of(AdjElem const& x) const {
      return x.is_zero() ? 0 : 1;
    }
    AdjElem r_key(AdjElem const& x) const {
      return x.is_zero() ? x : AdjElem{x.p, x.p};
    }
    AdjElem l_key(AdjElem const& x) const {
      return x.is_zero() ? x : AdjElem{x.q, x.q};
    }
    std::string format(AdjElem const& x) const {
      if (x.is_zero())
        return "0";
      return "(" + _names[x.p] + "," + _names[x.q] + ")";
    }
    AdjElem parse(std::string const& s) const {
      if (s == "0")
        return {};
      if (s.size() < 5 || s.front() != '(' || s.back() != ')')
        throw ValidationError("malformed adjacency element \"" + s + "\"");
      auto comma = s.find(',');
      if (comma == std::string::npos)
        throw ValidationError("malformed adjacency element \"" + s + "\"");
      auto find = [&](std::string const& nm) {
        auto it = std::find(_names.begin(), _names.end(), nm);
        if (it == _names.end())
          throw ValidationError("unknown vertex \"" + nm + "\"");
        return static_cast<int>(it - _names.begin());
      };
      return {find(s.substr(1, comma - 1)), find(s.substr(comma + 1, s.size() - comma - 2))};
    }
    // rank 1 is the nonzero D-class; the zero class is not offered
    std::vector<int> ranks() const {
      return {1};
    }

   private:
    std::vector<std::string>       _names;
    std::vector<std::vector<bool>> _adj;
  };

  using MonoidHandle
      = std::variant<PartitionMonoid, BrauerMonoid, TransformationMonoid, AdjacencySemigroup>;

  template <typename S>
  std::vector<typename S::element_type> idempotents(S const& s) {
    std::vector<typename S::element_type> out;
    for (auto const& x : s.elements())
      if (s.product(x, x) == x)
        out.push_back(x);
    return out;
  }

  template <typename S>
  std::vector<typename S::element_type> projections(S const& s) {
    static_assert(S::has_star);
    std::vector<typename S::element_type> out;
    for (auto const& x : s.elements())
      if (s.star(x) == x && s.product(x, x) == x)
        out.push_back(x);
    return out;
  }

}  // namespace pmon

template <>
struct std::hash<pmon::AdjElem> {
  size_t operator()(pmon::AdjElem const& x) const noexcept {
    return static_cast<size_t>(x.hash());
  }
};

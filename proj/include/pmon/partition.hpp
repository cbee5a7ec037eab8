#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pmon {

  // Points are written as signed integers: k > 0 is the upper point k, k < 0
  // is the lower point |k|'.
  using Point = int;

  inline constexpr int kMaxDegree = 16;
  inline constexpr int kDefaultDegreeCap = 8;

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class ValidationError : public Error {
   public:
    using Error::Error;
  };

  inline std::string point_name(Point p) {
    return p > 0 ? std::to_string(p) : std::to_string(-p) + "'";
  }

  namespace detail {
    struct UnionFind {
      std::array<uint8_t, 3 * kMaxDegree> parent;
      explicit UnionFind(int size) {
        for (int i = 0; i < size; ++i)
          parent[i] = static_cast<uint8_t>(i);
      }
      int find(int x) {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x         = parent[x];
        }
        return x;
      }
      void unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x != y)
          parent[std::max(x, y)] = static_cast<uint8_t>(std::min(x, y));
      }
    };
  }  // namespace detail

  // An equivalence relation on {1..n}, stored as canonical class labels of
  // 0-based positions.
  class Equivalence {
   public:
    Equivalence() = default;
    explicit Equivalence(std::vector<uint8_t> labels) : _cls(std::move(labels)) {
      canonicalize();
    }

    static Equivalence trivial(int n) {
      std::vector<uint8_t> v(n);
      for (int i = 0; i < n; ++i)
        v[i] = static_cast<uint8_t>(i);
      return Equivalence(std::move(v));
    }
    static Equivalence universal(int n) {
      return Equivalence(std::vector<uint8_t>(n, 0));
    }

    int size() const noexcept {
      return static_cast<int>(_cls.size());
    }
    int num_classes() const noexcept {
      return _classes;
    }
    int operator[](int i) const {
      return _cls[i];
    }
    bool related(int i, int j) const {
      return _cls[i] == _cls[j];
    }

    // Classes as sorted lists of 1-based points, in first-occurrence order.
    std::vector<std::vector<int>> classes() const {
      std::vector<std::vector<int>> out(_classes);
      for (int i = 0; i < size(); ++i)
        out[_cls[i]].push_back(i + 1);
      return out;
    }

    // this ⊆ other as relations
    bool finer_than(Equivalence const& other) const {
      std::vector<int> img(_classes, -1);
      for (int i = 0; i < size(); ++i) {
        if (img[_cls[i]] == -1)
          img[_cls[i]] = other._cls[i];
        else if (img[_cls[i]] != other._cls[i])
          return false;
      }
      return true;
    }

    Equivalence join(Equivalence const& other) const {
      detail::UnionFind uf(size());
      std::vector<int> first_a(_classes, -1), first_b(other._classes, -1);
      for (int i = 0; i < size(); ++i) {
        if (first_a[_cls[i]] == -1)
          first_a[_cls[i]] = i;
        else
          uf.unite(i, first_a[_cls[i]]);
        if (first_b[other._cls[i]] == -1)
          first_b[other._cls[i]] = i;
        else
          uf.unite(i, first_b[other._cls[i]]);
      }
      std::vector<uint8_t> v(size());
      for (int i = 0; i < size(); ++i)
        v[i] = static_cast<uint8_t>(uf.find(i));
      return Equivalence(std::move(v));
    }

    bool operator==(Equivalence const&) const = default;
    auto operator<=>(Equivalence const& o) const {
      return _cls <=> o._cls;
    }

   private:
    void canonicalize() {
      std::array<int, 256> map;
      map.fill(-1);
      int next = 0;
      for (auto& c : _cls) {
        if (map[c] == -1)
          map[c] = next++;
        c = static_cast<uint8_t>(map[c]);
      }
      _classes = next;
    }

    std::vector<uint8_t> _cls;
    int                  _classes = 0;
  };

  class Partition {
   public:
    Partition() = default;

    static Partition identity(int n) {
      Partition p(n);
      for (int i = 0; i < n; ++i) {
        p._lab[i]     = static_cast<uint8_t>(i);
        p._lab[i + n] = static_cast<uint8_t>(i);
      }
      p._nb = static_cast<uint8_t>(n);
      return p;
    }

    // Positions 0..n-1 are the upper points, n..2n-1 the lower points; any
    // block identifiers are accepted and canonicalized.
    template <typename Container>
    static Partition from_labels(int n, Container const& labels) {
      check_degree(n);
      if (static_cast<int>(std::size(labels)) != 2 * n)
        throw ValidationError("labeling of length "
                              + std::to_string(std::size(labels))
                              + " does not match degree "
                              + std::to_string(n));
      Partition p(n);
      std::vector<int> raw(std::begin(labels), std::end(labels));
      std::vector<int> map;
      int              next = 0;
      for (int i = 0; i < 2 * n; ++i) {
        if (raw[i] < 0)
          throw ValidationError("negative block identifier");
        if (static_cast<size_t>(raw[i]) >= map.size())
          map.resize(raw[i] + 1, -1);
        if (map[raw[i]] == -1)
          map[raw[i]] = next++;
        p._lab[i] = static_cast<uint8_t>(map[raw[i]]);
      }
      p._nb = static_cast<uint8_t>(next);
      return p;
    }

    static Partition from_blocks(int n, std::vector<std::vector<Point>> const& blocks) {
      check_degree(n);
      std::array<int, 2 * kMaxDegree> lab;
      lab.fill(-1);
      for (size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty())
          throw ValidationError("empty block");
        for (Point x : blocks[b]) {
          if (x == 0 || x > n || x < -n)
            throw ValidationError("point " + point_name(x)
                                  + " out of range for degree "
                                  + std::to_string(n));
          int pos = x > 0 ? x - 1 : n - x - 1;
          if (lab[pos] != -1)
            throw ValidationError("point " + point_name(x)
                                  + " occurs in more than one block");
          lab[pos] = static_cast<int>(b);
        }
      }
      for (int i = 0; i < 2 * n; ++i)
        if (lab[i] == -1)
          throw ValidationError("point " + point_name(i < n ? i + 1 : n - i - 1)
                                + " is not covered");
      return from_labels(n, std::vector<int>(lab.begin(), lab.begin() + 2 * n));
    }

    // "1 4; 2 3 4' 5'; 5 6; 1' 2' 6'; 3'".  The degree is the largest point
    // mentioned unless given explicitly.
    static Partition parse(std::string_view text, int n = 0) {
      std::vector<std::vector<Point>> blocks;
      int                             maxpt = 0;
      std::string                     s(text);
      std::stringstream               ss(s);
      std::string                     chunk;
      while (std::getline(ss, chunk, ';')) {
        std::stringstream       cs(chunk);
        std::string             tok;
        std::vector<Point>      block;
        while (cs >> tok) {
          bool dashed = false;
          if (!tok.empty() && tok.back() == '\'') {
            dashed = true;
            tok.pop_back();
          }
          if (tok.empty()
              || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw ValidationError("malformed point \"" + tok + "\"");
          int v = std::stoi(tok);
          if (v == 0)
            throw ValidationError("point 0 out of range");
          maxpt = std::max(maxpt, v);
          block.push_back(dashed ? -v : v);
        }
        if (block.empty()) {
          if (chunk.find_first_not_of(" \t\n") != std::string::npos)
            throw ValidationError("malformed block \"" + chunk + "\"");
          continue;
        }
        blocks.push_back(std::move(block));
      }
      if (blocks.empty())
        throw ValidationError("empty partition text");
      return from_blocks(n == 0 ? maxpt : n, blocks);
    }

    int degree() const noexcept {
      return _n;
    }
    int num_blocks() const noexcept {
      return _nb;
    }
    // block identifier of position i (see from_labels)
    int label(int i) const noexcept {
      return _lab[i];
    }
    int upper(int k) const noexcept {
      return _lab[k - 1];
    }
    int lower(int k) const noexcept {
      return _lab[_n + k - 1];
    }

    // Blocks in canonical order; in each block upper points ascend, then
    // lower points ascend.
    std::vector<std::vector<Point>> blocks() const {
      std::vector<std::vector<Point>> out(_nb);
      for (int i = 0; i < _n; ++i)
        out[_lab[i]].push_back(i + 1);
      for (int i = 0; i < _n; ++i)
        out[_lab[_n + i]].push_back(-(i + 1));
      return out;
    }

    std::string to_string() const {
      std::string s;
      auto        bl = blocks();
      for (size_t b = 0; b < bl.size(); ++b) {
        if (b)
          s += "; ";
        for (size_t k = 0; k < bl[b].size(); ++k) {
          if (k)
            s += ' ';
          s += point_name(bl[b][k]);
        }
      }
      return s;
    }

    uint64_t hash() const noexcept {
      uint64_t h = 1469598103934665603ull ^ _n;
      for (int i = 0; i < 2 * _n; ++i) {
        h ^= _lab[i];
        h *= 1099511628211ull;
      }
      return h;
    }

    bool operator==(Partition const& o) const noexcept {
      return _n == o._n && std::equal(_lab.begin(), _lab.begin() + 2 * _n, o._lab.begin());
    }
    std::strong_ordering operator<=>(Partition const& o) const noexcept {
      if (_n != o._n)
        return _n <=> o._n;
      for (int i = 0; i < 2 * _n; ++i)
        if (_lab[i] != o._lab[i])
          return _lab[i] <=> o._lab[i];
      return std::strong_ordering::equal;
    }

   private:
    explicit Partition(int n) : _n(static_cast<uint8_t>(n)) {
      _lab.fill(0);
    }

    static void check_degree(int n) {
      if (n < 1 || n > kMaxDegree)
        throw ValidationError("degree " + std::to_string(n) + " outside 1.."
                              + std::to_string(kMaxDegree));
    }

    friend struct PartitionOps;

    std::array<uint8_t, 2 * kMaxDegree> _lab{};
    uint8_t                             _n  = 0;
    uint8_t                             _nb = 0;
  };

  struct PartitionHash {
    size_t operator()(Partition const& p) const noexcept {
      return static_cast<size_t>(p.hash());
    }
  };

  struct Product {
    Partition part;
    int       floats = 0;
    // each floating component as a sorted list of middle points 1..n
    std::vector<std::vector<int>> floating;
  };

  struct PartitionOps {
    // Product graph on 3n vertices: 0..n-1 top row of a, n..2n-1 the middle
    // row where a's bottom meets b's top, 2n..3n-1 bottom row of b.
    static Product multiply_full(Partition const& a, Partition const& b, bool want_floating) {
      if (a._n != b._n)
        throw Error("degree mismatch: " + std::to_string(a._n) + " and "
                    + std::to_string(b._n));
      int const               n = a._n;
      detail::UnionFind       uf(3 * n);
      std::array<int, 2 * kMaxDegree> first;
      first.fill(-1);
      for (int i = 0; i < 2 * n; ++i) {
        int b_ = a._lab[i];
        if (first[b_] == -1)
          first[b_] = i;
        else
          uf.unite(first[b_], i);
      }
      first.fill(-1);
      for (int i = 0; i < 2 * n; ++i) {
        int b_ = b._lab[i];
        int v  = i + n;
        if (first[b_] == -1)
          first[b_] = v;
        else
          uf.unite(first[b_], v);
      }
      Product out;
      out.part = Partition(n);
      std::array<int, 3 * kMaxDegree> map;
      map.fill(-1);
      int next = 0;
      for (int i = 0; i < n; ++i) {
        int r = uf.find(i);
        if (map[r] == -1)
          map[r] = next++;
        out.part._lab[i] = static_cast<uint8_t>(map[r]);
      }
      for (int i = 0; i < n; ++i) {
        int r = uf.find(2 * n + i);
        if (map[r] == -1)
          map[r] = next++;
        out.part._lab[n + i] = static_cast<uint8_t>(map[r]);
      }
      out.part._nb = static_cast<uint8_t>(next);
      std::array<int, 3 * kMaxDegree> fl;
      fl.fill(-1);
      for (int i = 0; i < n; ++i) {
        int r = uf.find(n + i);
        if (map[r] != -1)
          continue;
        if (fl[r] == -1) {
          fl[r] = out.floats++;
          if (want_floating)
            out.floating.emplace_back();
        }
        if (want_floating)
          out.floating[fl[r]].push_back(i + 1);
      }
      return out;
    }

    static Partition involution(Partition const& a) {
      int                  n = a._n;
      std::vector<uint8_t> v(2 * n);
      for (int i = 0; i < n; ++i) {
        v[i]     = a._lab[n + i];
        v[n + i] = a._lab[i];
      }
      return Partition::from_labels(n, v);
    }
  };

  inline Partition multiply(Partition const& a, Partition const& b) {
    return PartitionOps::multiply_full(a, b, false).part;
  }

  inline Product multiply_with_floats(Partition const& a, Partition const& b) {
    return PartitionOps::multiply_full(a, b, true);
  }

  inline Partition operator*(Partition const& a, Partition const& b) {
    return multiply(a, b);
  }

  inline Partition involution(Partition const& a) {
    return PartitionOps::involution(a);
  }

  struct BlockShape {
    int nblocks = 0;
    std::array<bool, 2 * kMaxDegree> has_upper{}, has_lower{};
  };

  inline BlockShape block_shape(Partition const& a) {
    BlockShape s;
    s.nblocks = a.num_blocks();
    int n     = a.degree();
    for (int i = 0; i < n; ++i) {
      s.has_upper[a.label(i)]     = true;
      s.has_lower[a.label(n + i)] = true;
    }
    return s;
  }

  inline int rank(Partition const& a) {
    auto s = block_shape(a);
    int  r = 0;
    for (int b = 0; b < s.nblocks; ++b)
      r += s.has_upper[b] && s.has_lower[b];
    return r;
  }

  inline int ntu(Partition const& a) {
    auto s = block_shape(a);
    int  k = 0;
    for (int b = 0; b < s.nblocks; ++b)
      k += s.has_upper[b] && !s.has_lower[b];
    return k;
  }

  inline int ntd(Partition const& a) {
    auto s = block_shape(a);
    int  k = 0;
    for (int b = 0; b < s.nblocks; ++b)
      k += !s.has_upper[b] && s.has_lower[b];
    return k;
  }

  // upper points lying in transversals
  inline std::vector<int> dom(Partition const& a) {
    auto             s = block_shape(a);
    std::vector<int> out;
    for (int i = 0; i < a.degree(); ++i)
      if (s.has_lower[a.label(i)])
        out.push_back(i + 1);
    return out;
  }

  inline std::vector<int> codom(Partition const& a) {
    auto             s = block_shape(a);
    int              n = a.degree();
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
      if (s.has_upper[a.label(n + i)])
        out.push_back(i + 1);
    return out;
  }

  inline Equivalence ker(Partition const& a) {
    std::vector<uint8_t> v(a.degree());
    for (int i = 0; i < a.degree(); ++i)
      v[i] = static_cast<uint8_t>(a.label(i));
    return Equivalence(std::move(v));
  }

  inline Equivalence coker(Partition const& a) {
    int                  n = a.degree();
    std::vector<uint8_t> v(n);
    for (int i = 0; i < n; ++i)
      v[i] = static_cast<uint8_t>(a.label(n + i));
    return Equivalence(std::move(v));
  }

  inline bool is_idempotent(Partition const& a) {
    return multiply(a, a) == a;
  }

  inline bool is_projection(Partition const& a) {
    return involution(a) == a && is_idempotent(a);
  }

  // id_σ: the full-domain projection whose blocks are C ∪ C' for the classes C
  // of σ.
  inline Partition identity_of(Equivalence const& sigma) {
    int              n = sigma.size();
    std::vector<int> v(2 * n);
    for (int i = 0; i < n; ++i)
      v[i] = v[n + i] = sigma[i];
    return Partition::from_labels(n, v);
  }

  inline Partition d_projection(Partition const& a) {
    return identity_of(ker(a));
  }

  inline Partition r_projection(Partition const& a) {
    return identity_of(coker(a));
  }

  struct Component {
    std::vector<int> points;  // a class X of KER(a)
    Partition        part;     // restriction of a to X ∪ X', relabelled onto 1..|X|
    int              rank = 0;
  };

  struct Decomposition {
    bool                   idempotent = false;
    std::string            reason;  // why the test refused, when it did
    std::vector<Component> components;
  };

  // Splits a along the classes of ker(a) ∨ coker(a) and tests each piece for
  // rank at most one.  Idempotents are exactly the partitions passing this.
  inline Decomposition idempotent_components(Partition const& a) {
    Decomposition out;
    int           n     = a.degree();
    Equivalence   super = ker(a).join(coker(a));
    auto          cls   = super.classes();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (a.label(i) == a.label(n + j) && !super.related(i, j)) {
          out.reason = "block meets KER classes of " + std::to_string(i + 1)
                       + " and " + std::to_string(j + 1) + "'";
          return out;
        }
    out.idempotent = true;
    for (auto const& X : cls) {
      int              m = static_cast<int>(X.size());
      std::vector<int> v(2 * m);
      for (int k = 0; k < m; ++k) {
        v[k]     = a.label(X[k] - 1);
        v[m + k] = a.label(n + X[k] - 1);
      }
      Component c{X, Partition::from_labels(m, v), 0};
      c.rank = pmon::rank(c.part);
      if (c.rank > 1) {
        out.idempotent = false;
        out.reason     = "component on class starting at " + std::to_string(X[0])
                     + " has rank " + std::to_string(c.rank);
      }
      out.components.push_back(std::move(c));
    }
    return out;
  }

  struct TwistedElement {
    long long shift = 0;
    Partition part;
    bool      operator==(TwistedElement const&) const = default;
  };

  inline TwistedElement twisted_multiply(TwistedElement const& x, TwistedElement const& y) {
    auto pr = multiply_with_floats(x.part, y.part);
    return {x.shift + y.shift + pr.floats, pr.part};
  }

}  // namespace pmon

template <>
struct std::hash<pmon::Partition> {
  size_t operator()(pmon::Partition const& p) const noexcept {
    return static_cast<size_t>(p.hash());
  }
};

#pragma once

#include <set>
#include <string>
#include <vector>

namespace pmon {

  // Permutation of {0..r-1} acting on the right: (σ*τ)(x) = τ(σ(x)), matching
  // composition of diagrams from top to bottom.
  class Perm {
   public:
    Perm() = default;
    explicit Perm(std::vector<int> images) : _img(std::move(images)) {}

    static Perm identity(int r) {
      std::vector<int> v(r);
      for (int i = 0; i < r; ++i)
        v[i] = i;
      return Perm(std::move(v));
    }

    int degree() const noexcept {
      return static_cast<int>(_img.size());
    }
    int operator[](int i) const {
      return _img[i];
    }
    bool is_identity() const {
      for (int i = 0; i < degree(); ++i)
        if (_img[i] != i)
          return false;
      return true;
    }
    Perm inverse() const {
      std::vector<int> v(_img.size());
      for (int i = 0; i < degree(); ++i)
        v[_img[i]] = i;
      return Perm(std::move(v));
    }
    Perm operator*(Perm const& t) const {
      std::vector<int> v(_img.size());
      for (int i = 0; i < degree(); ++i)
        v[i] = t._img[_img[i]];
      return Perm(std::move(v));
    }
    std::vector<int> const& images() const {
      return _img;
    }
    // 1-based image list, e.g. "[3,1,2]"
    std::string to_string() const {
      std::string s = "[";
      for (int i = 0; i < degree(); ++i)
        s += (i ? "," : "") + std::to_string(_img[i] + 1);
      return s + "]";
    }

    bool operator==(Perm const&) const = default;
    auto operator<=>(Perm const&) const = default;

   private:
    std::vector<int> _img;
  };

  // order of the group generated by gens, by closure
  inline size_t generated_order(std::vector<Perm> const& gens, int r) {
    std::set<Perm>    seen{Perm::identity(r)};
    std::vector<Perm> frontier{Perm::identity(r)};
    while (!frontier.empty()) {
      std::vector<Perm> next;
      for (auto const& x : frontier)
        for (auto const& g : gens) {
          auto y = x * g;
          if (seen.insert(y).second)
            next.push_back(y);
        }
      frontier = std::move(next);
    }
    return seen.size();
  }

}  // namespace pmon

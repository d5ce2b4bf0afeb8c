#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "chartab/error.hpp"
#include "chartab/group.hpp"

namespace chartab {

// Permutation acting on the right: i^(a*b) = (i^a)^b. Stored 0-based.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree) : img_(degree) { std::iota(img_.begin(), img_.end(), 0u); }
  explicit Permutation(std::vector<std::uint32_t> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (auto x : img_) {
      if (x >= img_.size() || seen[x]) fail(ErrorKind::validation, "images do not form a bijection");
      seen[x] = true;
    }
  }
  // From 1-based images.
  static Permutation from_images(const std::vector<std::size_t>& one_based) {
    std::vector<std::uint32_t> v;
    for (auto x : one_based) {
      if (x == 0) fail(ErrorKind::validation, "permutation images are 1-based");
      v.push_back(static_cast<std::uint32_t>(x - 1));
    }
    return Permutation(std::move(v));
  }
  // From disjoint cycles given 1-based.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<std::size_t>>& cycles) {
    std::vector<std::uint32_t> v(degree);
    std::iota(v.begin(), v.end(), 0u);
    for (const auto& c : cycles)
      for (std::size_t i = 0; i < c.size(); ++i) v[c[i] - 1] = static_cast<std::uint32_t>(c[(i + 1) % c.size()] - 1);
    return Permutation(std::move(v));
  }

  std::size_t degree() const { return img_.size(); }
  std::uint32_t operator()(std::size_t i) const { return img_[i]; }
  const std::vector<std::uint32_t>& images() const { return img_; }

  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) fail(ErrorKind::shape, "permutation degree mismatch");
    Permutation r;
    r.img_.resize(a.degree());
    for (std::size_t i = 0; i < a.degree(); ++i) r.img_[i] = b.img_[a.img_[i]];
    return r;
  }
  Permutation inverse() const {
    Permutation r;
    r.img_.resize(degree());
    for (std::size_t i = 0; i < degree(); ++i) r.img_[img_[i]] = static_cast<std::uint32_t>(i);
    return r;
  }
  bool is_identity() const {
    for (std::size_t i = 0; i < degree(); ++i)
      if (img_[i] != i) return false;
    return true;
  }
  std::uint64_t order() const {
    std::vector<bool> seen(degree(), false);
    std::uint64_t o = 1;
    for (std::size_t i = 0; i < degree(); ++i) {
      if (seen[i]) continue;
      std::uint64_t len = 0;
      for (std::size_t j = i; !seen[j]; j = img_[j]) {
        seen[j] = true;
        ++len;
      }
      o = std::lcm(o, len);
    }
    return o;
  }
  std::size_t fixed_points() const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < degree(); ++i) n += img_[i] == i;
    return n;
  }

  std::string cycle_string() const {
    std::string s;
    std::vector<bool> seen(degree(), false);
    for (std::size_t i = 0; i < degree(); ++i) {
      if (seen[i] || img_[i] == i) continue;
      s += "(";
      for (std::size_t j = i; !seen[j]; j = img_[j]) {
        seen[j] = true;
        if (j != i) s += ",";
        s += std::to_string(j + 1);
      }
      s += ")";
    }
    return s.empty() ? "()" : s;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

 private:
  std::vector<std::uint32_t> img_;
};

template <>
struct GroupTraits<Permutation> {
  static Permutation inverse(const Permutation& a) { return a.inverse(); }
  static Permutation identity_like(const Permutation& a) { return Permutation(a.degree()); }
  static std::uint64_t order(const Permutation& a) { return a.order(); }
};

}  // namespace chartab

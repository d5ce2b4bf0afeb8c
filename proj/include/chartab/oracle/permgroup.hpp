#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chartab/error.hpp"
#include "chartab/numbers.hpp"
#include "chartab/perm.hpp"
#include "chartab/table/classmap.hpp"
#include "chartab/table/head.hpp"

namespace chartab::oracle {

inline constexpr std::size_t default_enumeration_cap = 100000;

// Brute-force permutation group; elements are enumerated on demand and cached.
class PermGroup {
 public:
  PermGroup(std::size_t degree, std::vector<Permutation> gens, std::string name = "")
      : degree_(degree), gens_(std::move(gens)), name_(std::move(name)) {
    for (const auto& g : gens_)
      if (g.degree() != degree_) fail(ErrorKind::shape, "generator degree differs from group degree");
  }

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  const std::string& name() const { return name_; }

  // BFS closure from the identity, applying generators in sorted order.
  const std::vector<Permutation>& elements(std::size_t cap = default_enumeration_cap) {
    if (elems_) return *elems_;
    std::vector<Permutation> sorted = gens_;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Permutation> out{Permutation(degree_)};
    std::map<Permutation, std::size_t> idx{{out[0], 0}};
    for (std::size_t i = 0; i < out.size(); ++i)
      for (const auto& g : sorted) {
        Permutation h = out[i] * g;
        if (idx.emplace(h, out.size()).second) {
          out.push_back(std::move(h));
          if (out.size() > cap) fail(ErrorKind::cap_exceeded, "group has more than " + std::to_string(cap) + " elements");
        }
      }
    index_ = std::move(idx);
    elems_ = std::move(out);
    return *elems_;
  }
  std::size_t order(std::size_t cap = default_enumeration_cap) { return elements(cap).size(); }
  bool contains(const Permutation& x) {
    elements();
    return x.degree() == degree_ && index_.count(x);
  }

  struct Classes {
    table::TableHead head;
    std::vector<Permutation> representatives;
    std::vector<int> class_of;  // per element index
  };

  const Classes& classes() {
    if (classes_) return *classes_;
    const auto& el = elements();
    const std::size_t n = el.size();
    std::vector<int> raw(n, -1);
    std::vector<std::vector<std::size_t>> members;
    for (std::size_t i = 0; i < n; ++i) {
      if (raw[i] >= 0) continue;
      int c = static_cast<int>(members.size());
      members.emplace_back();
      for (const auto& x : el) {
        std::size_t j = index_.at(x.inverse() * el[i] * x);
        if (raw[j] < 0) {
          raw[j] = c;
          members.back().push_back(j);
        }
      }
    }
    struct Info {
      std::uint64_t order;
      std::size_t size;
      Permutation min;
      int raw;
    };
    std::vector<Info> info;
    for (std::size_t c = 0; c < members.size(); ++c) {
      Permutation mn = el[members[c][0]];
      for (auto j : members[c]) mn = std::min(mn, el[j]);
      info.push_back({mn.order(), members[c].size(), mn, static_cast<int>(c)});
    }
    std::sort(info.begin(), info.end(), [](const Info& a, const Info& b) {
      if (a.order != b.order) return a.order < b.order;
      if (a.size != b.size) return a.size < b.size;
      return a.min < b.min;
    });
    std::vector<int> rank(members.size());
    for (std::size_t c = 0; c < info.size(); ++c) rank[info[c].raw] = static_cast<int>(c);

    Classes r;
    r.head.identifier = name_;
    r.head.size = static_cast<unsigned long>(n);
    for (const auto& in : info) {
      r.head.orders.push_back(static_cast<std::int64_t>(in.order));
      r.head.centralizers.push_back(BigInt(static_cast<unsigned long>(n / in.size)));
      r.representatives.push_back(in.min);
    }
    r.class_of.resize(n);
    for (std::size_t i = 0; i < n; ++i) r.class_of[i] = rank[raw[i]];
    for (int p : r.head.required_primes()) {
      table::PowerMap pm;
      for (const auto& rep : r.representatives) pm.push_back(r.class_of[index_.at(group_power(rep, p))]);
      r.head.powermaps[p] = pm;
    }
    table::validate(r.head, true);
    classes_ = std::move(r);
    return *classes_;
  }

  int class_of(const Permutation& x) {
    const auto& c = classes();
    auto it = index_.find(x);
    if (it == index_.end()) fail(ErrorKind::membership, "permutation " + x.cycle_string() + " is not in the group");
    return c.class_of[it->second];
  }

 private:
  std::size_t degree_;
  std::vector<Permutation> gens_;
  std::string name_;
  std::optional<std::vector<Permutation>> elems_;
  std::map<Permutation, std::size_t> index_;
  std::optional<Classes> classes_;
};

inline const std::vector<Permutation>& enumerate_group(PermGroup& g, std::size_t cap = default_enumeration_cap) {
  return g.elements(cap);
}

inline table::TableHead table_head_of(PermGroup& g) { return g.classes().head; }

inline table::ClassMap subgroup_fusion(PermGroup& sub, PermGroup& big) {
  if (sub.degree() != big.degree()) fail(ErrorKind::membership, "groups act on different degrees");
  for (const auto& x : sub.generators())
    if (!big.contains(x)) fail(ErrorKind::membership, "generator " + x.cycle_string() + " is not in the overgroup");
  std::vector<int> images;
  for (const auto& rep : sub.classes().representatives) images.push_back(big.class_of(rep));
  return table::ClassMap::from_determined(images);
}

inline bool is_conjugate(PermGroup& g, const Permutation& a, const Permutation& b) {
  if (!g.contains(a) || !g.contains(b)) fail(ErrorKind::membership, "element not in the group");
  for (const auto& x : g.elements())
    if (x.inverse() * a * x == b) return true;
  return false;
}

// Small groups used as fixtures.
namespace groups {

inline PermGroup cyclic(std::size_t n) {
  std::vector<std::size_t> cyc(n);
  for (std::size_t i = 0; i < n; ++i) cyc[i] = i + 1;
  return PermGroup(n, {Permutation::from_cycles(n, {cyc})}, "C" + std::to_string(n));
}
inline PermGroup symmetric(std::size_t n) {
  std::vector<std::size_t> cyc(n);
  for (std::size_t i = 0; i < n; ++i) cyc[i] = i + 1;
  return PermGroup(n, {Permutation::from_cycles(n, {{1, 2}}), Permutation::from_cycles(n, {cyc})}, "S" + std::to_string(n));
}
inline PermGroup alternating(std::size_t n) {
  std::vector<Permutation> gens;
  for (std::size_t k = 3; k <= n; ++k) gens.push_back(Permutation::from_cycles(n, {{1, 2, k}}));
  return PermGroup(n, gens, "A" + std::to_string(n));
}
inline PermGroup klein_four() {
  return PermGroup(4, {Permutation::from_cycles(4, {{1, 2}, {3, 4}}), Permutation::from_cycles(4, {{1, 3}, {2, 4}})}, "V4");
}
inline PermGroup dihedral8() {
  return PermGroup(4, {Permutation::from_cycles(4, {{1, 2, 3, 4}}), Permutation::from_cycles(4, {{1, 3}})}, "D8");
}
// SL(2,3) acting on the 8 nonzero vectors of GF(3)^2, generated by the two elementary transvections.
inline PermGroup sl2_3() {
  std::vector<std::pair<int, int>> pts;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (a || b) pts.emplace_back(a, b);
  auto act = [&](int m00, int m01, int m10, int m11) {
    std::vector<std::size_t> img;
    for (auto [a, b] : pts) {
      std::pair<int, int> v{(m00 * a + m01 * b) % 3, (m10 * a + m11 * b) % 3};
      img.push_back(static_cast<std::size_t>(std::find(pts.begin(), pts.end(), v) - pts.begin()) + 1);
    }
    return Permutation::from_images(img);
  };
  return PermGroup(8, {act(1, 1, 0, 1), act(1, 0, 1, 1)}, "SL(2,3)");
}
// Regular representation of the quaternion group on 8 points.
inline PermGroup quaternion8() {
  return PermGroup(8,
                   {Permutation::from_cycles(8, {{1, 2, 4, 7}, {3, 6, 8, 5}}),
                    Permutation::from_cycles(8, {{1, 3, 4, 8}, {2, 5, 7, 6}})},
                   "Q8");
}

}  // namespace groups

}  // namespace chartab::oracle

#pragma once

#include <concepts>
#include <cstdint>

namespace chartab {

// Backends specialize GroupTraits with inverse, identity_like and optionally order.
template <class G>
struct GroupTraits;

template <class G>
concept GroupElement = requires(const G& a, const G& b) {
  { a * b } -> std::convertible_to<G>;
  { a == b } -> std::convertible_to<bool>;
  { GroupTraits<G>::inverse(a) } -> std::convertible_to<G>;
  { GroupTraits<G>::identity_like(a) } -> std::convertible_to<G>;
};

template <class G>
concept OrderedGroupElement = GroupElement<G> && requires(const G& a) {
  { GroupTraits<G>::order(a) } -> std::convertible_to<std::uint64_t>;
};

template <GroupElement G>
G group_power(const G& g, std::int64_t e) {
  G base = e < 0 ? GroupTraits<G>::inverse(g) : g;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
  G r = GroupTraits<G>::identity_like(g);
  while (k) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

}  // namespace chartab

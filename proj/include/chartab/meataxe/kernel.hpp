#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "chartab/error.hpp"
#include "chartab/group.hpp"
#include "chartab/slp/search.hpp"
#include "chartab/slp/word.hpp"

namespace chartab::meataxe {

inline constexpr std::size_t kernel_enumeration_cap = std::size_t{1} << 16;

template <class G>
struct KernelGenerator {
  slp::FreeWord word;
  std::uint64_t power;  // element = word(big)^power
  G element;
};

// Words whose order drops under big -> small give kernel elements word^ord_small.
// The kernel is assumed elementary abelian of exponent p; membership is decided on its explicit element list.
template <OrderedGroupElement G, OrderedGroupElement H>
std::vector<KernelGenerator<G>> kernel_generators_by_order_mismatch(const std::vector<G>& big, const std::vector<H>& small,
                                                                    int p, std::size_t target_rank,
                                                                    std::size_t max_length) {
  if (big.size() != small.size() || big.empty()) fail(ErrorKind::arity, "generator lists must be nonempty and of equal length");
  std::vector<KernelGenerator<G>> found;
  if (target_rank == 0) return found;
  std::vector<G> elements{GroupTraits<G>::identity_like(big[0])};
  slp::enumerate_words<G>(big, max_length, [&](const std::vector<int>& letters, const G& g) {
    slp::FreeWord w = slp::word_from_letters(letters);
    std::uint64_t ord_small = GroupTraits<H>::order(slp::substitute(w, small));
    std::uint64_t ord_big = GroupTraits<G>::order(g);
    if (ord_big <= ord_small) return false;
    G k = group_power(g, static_cast<std::int64_t>(ord_small));
    for (const auto& e : elements)
      if (e == k) return false;
    if (!(group_power(k, p) == elements[0])) fail(ErrorKind::precondition, "kernel element of order other than p");
    if (elements.size() * static_cast<std::size_t>(p) > kernel_enumeration_cap)
      fail(ErrorKind::cap_exceeded, "kernel too large for explicit enumeration");
    std::vector<G> grown;
    grown.reserve(elements.size() * p);
    G kp = elements[0];
    for (int i = 0; i < p; ++i) {
      for (const auto& e : elements) grown.push_back(e * kp);
      kp = kp * k;
    }
    elements = std::move(grown);
    found.push_back({w, ord_small, k});
    return found.size() == target_rank;
  });
  if (found.size() < target_rank)
    fail(ErrorKind::not_found, "found " + std::to_string(found.size()) + " of " + std::to_string(target_rank) +
                                   " kernel generators up to word length " + std::to_string(max_length));
  return found;
}

}  // namespace chartab::meataxe

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "chartab/error.hpp"
#include "chartab/group.hpp"
#include "chartab/slp/word.hpp"

namespace chartab::slp {

// Visits nonempty positive words in length-then-lexicographic order (generator 0 < 1 < ...).
// The visitor returns true to stop. Returns false if the length bound was exhausted.
template <GroupElement G>
bool enumerate_words(const std::vector<G>& gens, std::size_t max_length,
                     const std::function<bool(const std::vector<int>&, const G&)>& visit) {
  if (gens.empty()) return false;
  const int n = static_cast<int>(gens.size());
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<int> letters(len, 0);
    std::vector<G> prefix;  // prefix[i] = product of letters[0..i]
    prefix.reserve(len);
    prefix.push_back(gens[0]);
    for (std::size_t i = 1; i < len; ++i) prefix.push_back(prefix.back() * gens[0]);
    while (true) {
      if (visit(letters, prefix.back())) return true;
      std::size_t i = len;
      while (i > 0 && letters[i - 1] == n - 1) --i;
      if (i == 0) break;
      ++letters[i - 1];
      prefix.resize(i - 1);
      for (std::size_t j = i - 1; j < len; ++j) {
        if (j >= i) letters[j] = 0;
        prefix.push_back(j == 0 ? gens[letters[0]] : G(prefix.back() * gens[letters[j]]));
      }
    }
  }
  return false;
}

inline FreeWord word_from_letters(const std::vector<int>& letters) {
  std::vector<FreeWord::Syllable> ss;
  for (int l : letters) ss.emplace_back(l, 1);
  return FreeWord::from_syllables(ss);
}

template <GroupElement G>
std::pair<FreeWord, G> word_search(const std::vector<G>& gens, const std::function<bool(const G&)>& pred,
                                   std::size_t max_length) {
  std::optional<std::pair<FreeWord, G>> found;
  enumerate_words<G>(gens, max_length, [&](const std::vector<int>& letters, const G& g) {
    if (!pred(g)) return false;
    found.emplace(word_from_letters(letters), g);
    return true;
  });
  if (!found) fail(ErrorKind::not_found, "no word up to length " + std::to_string(max_length) + " satisfies the predicate");
  return *found;
}

}  // namespace chartab::slp

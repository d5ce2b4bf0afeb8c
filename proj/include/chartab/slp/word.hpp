#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "chartab/error.hpp"
#include "chartab/group.hpp"

namespace chartab::slp {

// Freely reduced word: (generator index, nonzero exponent) with distinct neighbours.
class FreeWord {
 public:
  using Syllable = std::pair<int, long>;

  FreeWord() = default;
  static FreeWord generator(int i, long e = 1) {
    FreeWord w;
    if (e != 0) w.s_.emplace_back(i, e);
    return w;
  }
  static FreeWord from_syllables(const std::vector<Syllable>& ss) {
    FreeWord w;
    for (const auto& s : ss) w.push(s);
    return w;
  }

  const std::vector<Syllable>& syllables() const { return s_; }
  bool is_identity() const { return s_.empty(); }
  std::size_t length() const {
    std::size_t n = 0;
    for (const auto& [g, e] : s_) n += static_cast<std::size_t>(e < 0 ? -e : e);
    return n;
  }

  friend FreeWord operator*(const FreeWord& a, const FreeWord& b) {
    FreeWord r = a;
    for (const auto& s : b.s_) r.push(s);
    return r;
  }
  FreeWord inverse() const {
    FreeWord r;
    for (auto it = s_.rbegin(); it != s_.rend(); ++it) r.s_.emplace_back(it->first, -it->second);
    return r;
  }

  friend bool operator==(const FreeWord& a, const FreeWord& b) { return a.s_ == b.s_; }
  friend bool operator!=(const FreeWord& a, const FreeWord& b) { return !(a == b); }
  friend bool operator<(const FreeWord& a, const FreeWord& b) { return a.s_ < b.s_; }

  // Syllable form such as a*b^2*a^-1; the identity prints as <identity>.
  std::string str(const std::vector<std::string>& names) const {
    if (s_.empty()) return "<identity>";
    std::string out;
    for (std::size_t i = 0; i < s_.size(); ++i) {
      auto [g, e] = s_[i];
      if (g < 0 || static_cast<std::size_t>(g) >= names.size()) fail(ErrorKind::index, "generator without a name");
      if (i) out += "*";
      out += names[g];
      if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
  }

 private:
  std::vector<Syllable> s_;

  void push(Syllable s) {
    if (s.second == 0) return;
    if (!s_.empty() && s_.back().first == s.first) {
      s_.back().second += s.second;
      if (s_.back().second == 0) s_.pop_back();
      return;
    }
    s_.push_back(s);
  }
};

inline std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "g" + std::to_string(i + 1));
  return out;
}

inline std::vector<FreeWord> free_generators(std::size_t n) {
  std::vector<FreeWord> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(FreeWord::generator(static_cast<int>(i)));
  return out;
}

}  // namespace chartab::slp

namespace chartab {

template <>
struct GroupTraits<slp::FreeWord> {
  static slp::FreeWord inverse(const slp::FreeWord& a) { return a.inverse(); }
  static slp::FreeWord identity_like(const slp::FreeWord&) { return {}; }
};

namespace slp {

// Image of a word under the homomorphism sending generator i to gens[i].
template <GroupElement G>
G substitute(const FreeWord& w, const std::vector<G>& gens) {
  if (gens.empty()) fail(ErrorKind::arity, "substitution needs at least one generator");
  G r = GroupTraits<G>::identity_like(gens[0]);
  for (const auto& [g, e] : w.syllables()) {
    if (g < 0 || static_cast<std::size_t>(g) >= gens.size()) fail(ErrorKind::index, "word uses a missing generator");
    r = r * group_power(gens[g], e);
  }
  return r;
}

}  // namespace slp

}  // namespace chartab

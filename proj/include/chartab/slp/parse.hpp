#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <vector>

#include "chartab/error.hpp"
#include "chartab/slp/program.hpp"
#include "chartab/slp/word.hpp"

namespace chartab::slp {

inline void check_prefix_free(const std::vector<std::string>& names) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) fail(ErrorKind::name, "empty generator name");
    for (std::size_t j = 0; j < names.size(); ++j)
      if (i != j && names[j].compare(0, names[i].size(), names[i]) == 0)
        fail(ErrorKind::name, "generator name '" + names[i] + "' is a prefix of '" + names[j] + "'");
  }
}

namespace detail {

// expr := term ('*' term)* ; term := atom ('^' (int | atom))* ; atom := name | '(' expr ')'
// x^y is conjugation y^-1*x*y.
class WordParser {
 public:
  WordParser(const std::string& text, const std::vector<std::string>& names) : t_(text), names_(names) {}

  Slp run() {
    Product p = expr();
    skip();
    if (pos_ != t_.size()) error("unexpected '" + std::string(1, t_[pos_]) + "'");
    return Slp(static_cast<int>(names_.size()), std::move(lines_), {std::move(p)});
  }

 private:
  const std::string& t_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
  std::vector<Product> lines_;

  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::parse, "position " + std::to_string(pos_ + 1) + ": " + what);
  }
  void skip() {
    while (pos_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < t_.size() && t_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  int slot_of(const Product& p) {
    if (p.size() == 1 && p[0].exp == 1) return p[0].slot;
    lines_.push_back(p);
    return static_cast<int>(names_.size() + lines_.size());
  }

  Product expr() {
    Product p = term();
    while (eat('*')) {
      Product q = term();
      p.insert(p.end(), q.begin(), q.end());
    }
    return p;
  }

  Product term() {
    Product p = atom();
    while (eat('^')) {
      skip();
      if (pos_ < t_.size() && (t_[pos_] == '-' || t_[pos_] == '+' || std::isdigit(static_cast<unsigned char>(t_[pos_])))) {
        long e = integer();
        if (e == 0) {
          error("zero exponent");
        } else if (p.size() == 1) {
          p[0].exp *= e;
        } else {
          p = {{slot_of(p), e}};
        }
      } else {
        int y = slot_of(atom());
        int x = slot_of(p);
        p = {{y, -1}, {x, 1}, {y, 1}};
      }
    }
    return p;
  }

  Product atom() {
    skip();
    if (eat('(')) {
      Product p = expr();
      if (!eat(')')) error("expected ')'");
      return p;
    }
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (t_.compare(pos_, names_[i].size(), names_[i]) == 0) {
        pos_ += names_[i].size();
        return {{static_cast<int>(i) + 1, 1}};
      }
    if (pos_ >= t_.size()) error("unexpected end of input");
    error("unknown generator at '" + t_.substr(pos_, 8) + "'");
  }

  long integer() {
    std::size_t start = pos_;
    if (t_[pos_] == '-' || t_[pos_] == '+') ++pos_;
    std::size_t digits = pos_;
    while (pos_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[pos_]))) ++pos_;
    if (pos_ == digits) error("expected an integer exponent");
    try {
      return std::stol(t_.substr(start, pos_ - start));
    } catch (const std::out_of_range&) {
      error("exponent out of range");
    }
  }
};

}  // namespace detail

inline Slp parse_word_program(const std::string& expr, const std::vector<std::string>& names) {
  check_prefix_free(names);
  return detail::WordParser(expr, names).run();
}

inline FreeWord parse_word(const std::string& expr, const std::vector<std::string>& names) {
  return evaluate(parse_word_program(expr, names), free_generators(names.size()))[0];
}

// Relators hold iff every output of every program evaluates to the identity.
template <GroupElement G>
bool satisfies_relators(const std::vector<Slp>& relators, const std::vector<G>& gens) {
  for (const auto& r : relators)
    for (const auto& g : evaluate(r, gens))
      if (!(g == GroupTraits<G>::identity_like(g))) return false;
  return true;
}

}  // namespace chartab::slp

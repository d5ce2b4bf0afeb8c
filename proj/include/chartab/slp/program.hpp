#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chartab/error.hpp"
#include "chartab/group.hpp"

namespace chartab::slp {

struct Factor {
  int slot;  // 1-based
  long exp;
  friend bool operator==(const Factor&, const Factor&) = default;
};

using Product = std::vector<Factor>;

// Builds a product from the flat list (slot1, exp1, slot2, exp2, ...).
inline Product product(std::initializer_list<long> flat) {
  if (flat.size() % 2) fail(ErrorKind::validation, "product needs an even-length list");
  Product p;
  for (auto it = flat.begin(); it != flat.end(); it += 2) p.push_back({static_cast<int>(*it), *(it + 1)});
  return p;
}

struct EvalStats {
  std::size_t slots_evaluated = 0;
};

class Slp {
 public:
  Slp() = default;
  Slp(int inputs, std::vector<Product> lines, std::vector<Product> outputs)
      : inputs_(inputs), lines_(std::move(lines)), outputs_(std::move(outputs)) {
    validate();
  }

  int inputs() const { return inputs_; }
  const std::vector<Product>& lines() const { return lines_; }
  const std::vector<Product>& outputs() const { return outputs_; }
  int slot_count() const { return inputs_ + static_cast<int>(lines_.size()); }

  void validate() const {
    if (inputs_ < 0) fail(ErrorKind::validation, "negative input count");
    for (std::size_t j = 0; j < lines_.size(); ++j) {
      if (lines_[j].empty()) fail(ErrorKind::validation, "empty line " + std::to_string(j + 1));
      for (const auto& f : lines_[j])
        if (f.slot < 1 || f.slot > inputs_ + static_cast<int>(j))
          fail(ErrorKind::validation, "line " + std::to_string(j + 1) + " references undefined slot " + std::to_string(f.slot));
    }
    if (outputs_.empty()) fail(ErrorKind::validation, "program has no outputs");
    for (std::size_t j = 0; j < outputs_.size(); ++j) {
      if (outputs_[j].empty()) fail(ErrorKind::validation, "empty output " + std::to_string(j + 1));
      for (const auto& f : outputs_[j])
        if (f.slot < 1 || f.slot > slot_count())
          fail(ErrorKind::validation, "output " + std::to_string(j + 1) + " references undefined slot " + std::to_string(f.slot));
    }
  }

  // Slots needed by the given outputs (1-based flags, index 0 unused).
  std::vector<bool> cone(const std::vector<std::size_t>& output_indices) const {
    std::vector<bool> need(slot_count() + 1, false);
    for (auto o : output_indices)
      for (const auto& f : outputs_.at(o)) need[f.slot] = true;
    for (int s = slot_count(); s > inputs_; --s)
      if (need[s])
        for (const auto& f : lines_[s - inputs_ - 1]) need[f.slot] = true;
    return need;
  }

  friend bool operator==(const Slp& a, const Slp& b) {
    return a.inputs_ == b.inputs_ && a.lines_ == b.lines_ && a.outputs_ == b.outputs_;
  }

 private:
  int inputs_ = 0;
  std::vector<Product> lines_;
  std::vector<Product> outputs_;
};

template <GroupElement G>
G evaluate_product(const Product& p, const std::vector<std::optional<G>>& slots) {
  std::optional<G> acc;
  for (const auto& f : p) {
    G term = group_power(*slots[f.slot], f.exp);
    acc = acc ? G(*acc * term) : term;
  }
  return *acc;
}

// Evaluates only the slots in the dependency cone of the outputs.
template <GroupElement G>
std::vector<G> evaluate(const Slp& s, const std::vector<G>& gens, EvalStats* stats = nullptr) {
  if (static_cast<int>(gens.size()) != s.inputs())
    fail(ErrorKind::arity, "program expects " + std::to_string(s.inputs()) + " inputs, got " + std::to_string(gens.size()));
  std::vector<std::size_t> all(s.outputs().size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::vector<bool> need = s.cone(all);
  std::vector<std::optional<G>> slots(s.slot_count() + 1);
  for (int i = 0; i < s.inputs(); ++i) slots[i + 1] = gens[i];
  for (int k = s.inputs() + 1; k <= s.slot_count(); ++k) {
    if (!need[k]) continue;
    slots[k] = evaluate_product(s.lines()[k - s.inputs() - 1], slots);
    if (stats) ++stats->slots_evaluated;
  }
  std::vector<G> out;
  for (const auto& o : s.outputs()) out.push_back(evaluate_product(o, slots));
  return out;
}

// Keeps the listed outputs (1-based positions), dropping lines outside their cone.
inline Slp restrict_outputs(const Slp& s, const std::vector<std::size_t>& positions) {
  std::vector<std::size_t> idx;
  for (auto p : positions) {
    if (p < 1 || p > s.outputs().size()) fail(ErrorKind::index, "output position " + std::to_string(p) + " out of range");
    idx.push_back(p - 1);
  }
  std::vector<bool> need = s.cone(idx);
  std::vector<int> renumber(s.slot_count() + 1, 0);
  for (int i = 1; i <= s.inputs(); ++i) renumber[i] = i;
  std::vector<Product> lines;
  int next = s.inputs();
  for (int k = s.inputs() + 1; k <= s.slot_count(); ++k) {
    if (!need[k]) continue;
    Product p = s.lines()[k - s.inputs() - 1];
    for (auto& f : p) f.slot = renumber[f.slot];
    lines.push_back(std::move(p));
    renumber[k] = ++next;
  }
  std::vector<Product> outs;
  for (auto i : idx) {
    Product p = s.outputs()[i];
    for (auto& f : p) f.slot = renumber[f.slot];
    outs.push_back(std::move(p));
  }
  return Slp(s.inputs(), std::move(lines), std::move(outs));
}

// Program computing outer(inner(g)).
inline Slp compose(const Slp& outer, const Slp& inner) {
  if (static_cast<std::size_t>(outer.inputs()) != inner.outputs().size())
    fail(ErrorKind::arity, "outer program expects " + std::to_string(outer.inputs()) + " inputs, inner yields " +
                               std::to_string(inner.outputs().size()));
  std::vector<Product> lines = inner.lines();
  std::vector<int> map(outer.slot_count() + 1, 0);
  int next = inner.slot_count();
  for (std::size_t i = 0; i < inner.outputs().size(); ++i) {
    lines.push_back(inner.outputs()[i]);
    map[i + 1] = ++next;
  }
  for (int k = outer.inputs() + 1; k <= outer.slot_count(); ++k) {
    Product p = outer.lines()[k - outer.inputs() - 1];
    for (auto& f : p) f.slot = map[f.slot];
    lines.push_back(std::move(p));
    map[k] = ++next;
  }
  std::vector<Product> outs;
  for (Product p : outer.outputs()) {
    for (auto& f : p) f.slot = map[f.slot];
    outs.push_back(std::move(p));
  }
  return Slp(inner.inputs(), std::move(lines), std::move(outs));
}

// One-input program g -> g^e.
inline Slp power_program(long e) { return Slp(1, {}, {{{1, e}}}); }

}  // namespace chartab::slp

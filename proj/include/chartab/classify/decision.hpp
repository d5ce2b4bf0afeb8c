#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chartab/error.hpp"
#include "chartab/ffmat.hpp"
#include "chartab/slp/program.hpp"

namespace chartab::classify {

using Label = std::string;

enum class MeasureKind { trace, rank };

// trace: trace_lift(x^power) over GF(p).
// rank:  rank((x^power + 1)^exponent) over GF(p).
struct Measurement {
  int p = 2;
  MeasureKind kind = MeasureKind::rank;
  std::int64_t power = 1;
  std::int64_t exponent = 1;

  friend auto operator<=>(const Measurement&, const Measurement&) = default;
};

inline void check_measurement(const Measurement& m) {
  if (m.p != 2 && m.p != 3 && m.p != 5) fail(ErrorKind::validation, "measurement characteristic must be 2, 3 or 5");
  if (m.power < 1 || m.exponent < 1) fail(ErrorKind::validation, "measurement power and exponent must be positive");
  if (m.kind == MeasureKind::rank && m.p != 2) fail(ErrorKind::validation, "rank measurements are 2-modular");
  if (m.kind == MeasureKind::trace && m.exponent != 1) fail(ErrorKind::validation, "trace measurements take no exponent");
}

inline std::string describe(const Measurement& m) {
  std::string x = m.power == 1 ? "x" : "x^" + std::to_string(m.power);
  if (m.kind == MeasureKind::trace) return "trace" + std::to_string(m.p) + "(" + x + ")";
  std::string s = "(" + x + "+1)";
  if (m.exponent != 1) s += "^" + std::to_string(m.exponent);
  return "rank" + std::to_string(m.p) + s;
}

// A node is a leaf (label set) or a measurement with a value table and an optional fallback.
// Nodes live in the owning table's pool and refer to each other by index.
struct DecisionNode {
  std::optional<Label> label;
  Measurement measure;
  std::map<std::int64_t, int> cases;
  std::optional<int> fallback;
};

struct DecisionTable {
  int version = 1;
  std::vector<DecisionNode> nodes;
  std::map<std::int64_t, int> roots;  // element order -> node

  int add_leaf(Label l) {
    if (l.empty()) fail(ErrorKind::validation, "empty leaf label");
    DecisionNode n;
    n.label = std::move(l);
    nodes.push_back(std::move(n));
    return static_cast<int>(nodes.size()) - 1;
  }
  int add_branch(const Measurement& m, std::map<std::int64_t, int> cases, std::optional<int> fallback = std::nullopt) {
    check_measurement(m);
    DecisionNode n;
    n.measure = m;
    n.cases = std::move(cases);
    n.fallback = fallback;
    nodes.push_back(std::move(n));
    return static_cast<int>(nodes.size()) - 1;
  }

  void validate() const {
    auto ok = [&](int i) { return i >= 0 && static_cast<std::size_t>(i) < nodes.size(); };
    for (const auto& n : nodes) {
      if (n.label) {
        if (n.label->empty()) fail(ErrorKind::validation, "empty leaf label");
        continue;
      }
      check_measurement(n.measure);
      if (n.cases.empty()) fail(ErrorKind::validation, "branch on " + describe(n.measure) + " has no cases");
      for (const auto& [v, c] : n.cases)
        if (!ok(c)) fail(ErrorKind::validation, "dangling node reference");
      if (n.fallback && !ok(*n.fallback)) fail(ErrorKind::validation, "dangling node reference");
    }
    for (const auto& [o, r] : roots) {
      if (o < 1) fail(ErrorKind::validation, "nonpositive element order " + std::to_string(o));
      if (!ok(r)) fail(ErrorKind::validation, "dangling root for order " + std::to_string(o));
    }
  }
};

class MeasurementProvider {
 public:
  virtual ~MeasurementProvider() = default;
  virtual std::int64_t element_order() = 0;
  virtual std::int64_t measure(const Measurement& m) = 0;
};

// Walks the tree for the element's order. Each measurement on the path is evaluated at most once;
// nothing off the path is evaluated. A missing case without fallback raises wrong_rank or
// wrong_trace after the measurement kind.
inline Label identify_class(MeasurementProvider& provider, const DecisionTable& table,
                            std::optional<std::int64_t> known_order = std::nullopt) {
  const std::int64_t order = known_order ? *known_order : provider.element_order();
  auto root = table.roots.find(order);
  if (root == table.roots.end()) fail(ErrorKind::wrong_order, "no classes of element order " + std::to_string(order));
  std::map<Measurement, std::int64_t> memo;
  int at = root->second;
  while (!table.nodes.at(at).label) {
    const DecisionNode& n = table.nodes[at];
    auto it = memo.find(n.measure);
    if (it == memo.end()) it = memo.emplace(n.measure, provider.measure(n.measure)).first;
    auto c = n.cases.find(it->second);
    if (c != n.cases.end()) {
      at = c->second;
    } else if (n.fallback) {
      at = *n.fallback;
    } else {
      fail(n.measure.kind == MeasureKind::rank ? ErrorKind::wrong_rank : ErrorKind::wrong_trace,
           describe(n.measure) + " = " + std::to_string(it->second) + " at element order " + std::to_string(order));
    }
  }
  return *table.nodes[at].label;
}

// Measurements on matrices for one element, given either directly or as the single output of a
// program evaluated on generators, per characteristic.
class MatrixProvider : public MeasurementProvider {
 public:
  explicit MatrixProvider(std::map<int, std::vector<ffmat::FFMatrix>> gens, std::optional<slp::Slp> program = std::nullopt)
      : gens_(std::move(gens)), program_(std::move(program)) {
    if (program_ && program_->outputs().size() != 1)
      fail(ErrorKind::arity, "program must have exactly one output");
    for (const auto& [p, g] : gens_) {
      if (g.empty()) fail(ErrorKind::arity, "no matrices for characteristic " + std::to_string(p));
      if (!program_ && g.size() != 1) fail(ErrorKind::arity, "without a program exactly one matrix per characteristic is used");
      if (static_cast<int>(g.front().field().p()) != p) fail(ErrorKind::field, "matrix field differs from its characteristic key");
    }
  }

  const ffmat::FFMatrix& element(int p) {
    auto it = elms_.find(p);
    if (it != elms_.end()) return it->second;
    auto g = gens_.find(p);
    if (g == gens_.end()) fail(ErrorKind::not_found, "no matrices in characteristic " + std::to_string(p));
    ffmat::FFMatrix x = program_ ? slp::evaluate(*program_, g->second).front() : g->second.front();
    ++evaluations_;
    return elms_.emplace(p, std::move(x)).first->second;
  }

  std::int64_t element_order() override {
    if (gens_.empty()) fail(ErrorKind::not_found, "no matrices");
    int p = gens_.count(2) ? 2 : gens_.begin()->first;
    return static_cast<std::int64_t>(ffmat::element_order(element(p)));
  }

  std::int64_t measure(const Measurement& m) override {
    check_measurement(m);
    const ffmat::FFMatrix& x = element(m.p);
    ffmat::FFMatrix y = m.power == 1 ? x : ffmat::power(x, m.power);
    if (m.kind == MeasureKind::trace) {
      if (x.field().k() != 1) fail(ErrorKind::field, "trace measurements need a prime field");
      return ffmat::trace_lift(y);
    }
    ffmat::FFMatrix z = y + ffmat::FFMatrix::identity(x.field(), x.rows());
    if (m.exponent != 1) z = ffmat::power(z, m.exponent);
    return static_cast<std::int64_t>(ffmat::rank(z));
  }

  std::size_t program_evaluations() const { return evaluations_; }

 private:
  std::map<int, std::vector<ffmat::FFMatrix>> gens_;
  std::optional<slp::Slp> program_;
  std::map<int, ffmat::FFMatrix> elms_;
  std::size_t evaluations_ = 0;
};

}  // namespace chartab::classify

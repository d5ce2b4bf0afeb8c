#pragma once

#include <stdexcept>
#include <string>

namespace chartab {

enum class ErrorKind {
  shape,
  singular,
  field,
  cap_exceeded,
  index,
  arity,
  parse,
  name,
  seed,
  non_canonical_seed,
  invariance,
  budget,
  not_found,
  division,
  domain,
  p_singular,
  head,
  incomplete_head,
  map,
  impossible_fusion,
  inconsistency,
  precondition,
  under_determined,
  construction,
  label,
  consistency,
  membership,
  validation,
  wrong_rank,
  wrong_trace,
  wrong_order,
};

inline const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::shape: return "shape";
    case ErrorKind::singular: return "singular";
    case ErrorKind::field: return "unsupported-field";
    case ErrorKind::cap_exceeded: return "cap-exceeded";
    case ErrorKind::index: return "index";
    case ErrorKind::arity: return "arity";
    case ErrorKind::parse: return "parse";
    case ErrorKind::name: return "name";
    case ErrorKind::seed: return "seed";
    case ErrorKind::non_canonical_seed: return "non-canonical-seed";
    case ErrorKind::invariance: return "invariance";
    case ErrorKind::budget: return "budget";
    case ErrorKind::not_found: return "not-found";
    case ErrorKind::division: return "division";
    case ErrorKind::domain: return "domain";
    case ErrorKind::p_singular: return "p-singular";
    case ErrorKind::head: return "head";
    case ErrorKind::incomplete_head: return "incomplete-head";
    case ErrorKind::map: return "map";
    case ErrorKind::impossible_fusion: return "impossible-fusion";
    case ErrorKind::inconsistency: return "inconsistency";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::under_determined: return "under-determined";
    case ErrorKind::construction: return "construction";
    case ErrorKind::label: return "label";
    case ErrorKind::consistency: return "consistency";
    case ErrorKind::membership: return "membership";
    case ErrorKind::validation: return "validation";
    case ErrorKind::wrong_rank: return "wrong-rank";
    case ErrorKind::wrong_trace: return "wrong-trace";
    case ErrorKind::wrong_order: return "wrong-element-order";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace chartab

#pragma once

#include "chartab/ffmat/field.hpp"
#include "chartab/ffmat/linalg.hpp"
#include "chartab/ffmat/matrix.hpp"
#include "chartab/ffmat/order.hpp"

#include "chartab/group.hpp"

namespace chartab {

template <>
struct GroupTraits<ffmat::FFMatrix> {
  static ffmat::FFMatrix inverse(const ffmat::FFMatrix& a) { return ffmat::inverse(a); }
  static ffmat::FFMatrix identity_like(const ffmat::FFMatrix& a) { return ffmat::FFMatrix::identity(a.field(), a.rows()); }
  static std::uint64_t order(const ffmat::FFMatrix& a) { return ffmat::element_order(a); }
};

}  // namespace chartab

#pragma once

#include "fig8/types.hpp"

namespace fig8 {

struct BranchedValue {
  cplx value;
  bool on_cut = false;  // argument hit [1, inf) within 1e-14
};

// Principal-branch dilogarithm on C \ [1, inf).  For arguments on the cut the
// limit from above is returned and on_cut is set.
BranchedValue dilog(cplx z);

// -log(1 - e^{mu}) with the principal log; the derivative d/dmu Li2(e^{mu}).
// Throws on-branch-cut when e^{mu} lands on [1, inf) within 1e-14.
cplx dilog_exp_derivative(cplx mu);

// log(1 + x) accurate for small |x| (complex log1p).
cplx clog1p(cplx x);

// e^v - 1 without cancellation for small |v| (complex expm1).
cplx cexpm1(cplx v);

}  // namespace fig8

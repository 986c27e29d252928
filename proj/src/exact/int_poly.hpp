#pragma once

// Integer-coefficient polynomial kernels shared by the exact module.

#include <vector>

#include "cubictors/poly.hpp"

namespace cubictors::detail {

/// Constant term first, no trailing zeros.
using IntPoly = std::vector<Integer>;

IntPoly to_int_poly(const RationalPoly& f);  // primitive integer model
RationalPoly from_int_poly(const IntPoly& f);

int degree(const IntPoly& f);
Integer content(const IntPoly& f);
void make_primitive(IntPoly& f);

/// lc(b)^(deg a - deg b + 1) a = q b + r; returns r.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

IntPoly primitive_prs_gcd(IntPoly a, IntPoly b);

/// Resultant via the subresultant algorithm (Collins, Brown).
Integer subresultant_resultant(IntPoly a, IntPoly b);

/// F(p/q) * q^deg F, computed exactly.
Integer homogeneous_value(const IntPoly& f, const Integer& p, const Integer& q);

}  // namespace cubictors::detail

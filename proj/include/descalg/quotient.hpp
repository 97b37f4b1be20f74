#pragma once

// The ideal spanned by the weight-n basis elements and the quotient map onto
// the type B descent algebra of rank n-2.

#include "descalg/algebra_b.hpp"
#include "descalg/algebra_d.hpp"
#include "descalg/report.hpp"

namespace descalg {

/// True iff every term of x has weight n.
bool is_in_ideal(const AlgebraElement& x);

/// Drops the weight-n terms and reads the rest in the type B algebra of
/// rank n-2.
BAlgebraElement project(const AlgebraElement& x);

/// Images B_r of the templates of Z(p, q) with z_00 >= 2 after subtracting
/// 2 from z_00, read as type B templates of rank n-2.
BAlgebraElement shifted_template_product(const BasisIndex& p, const BasisIndex& q);

/// Every product with at least one factor in the ideal stays in the ideal.
IdealReport verify_ideal(int n, unsigned jobs = 1);

/// For all p, q of weight <= n-2: the projected type D product, the type B
/// rule and the shifted-template product agree, and the shifted templates
/// are exactly the type B templates.
QuotientReport verify_quotient_iso(int n, unsigned jobs = 1);

}  // namespace descalg

// Copyright 2026 The homavg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef HOMAVG_IDENTITIES_HPP
#define HOMAVG_IDENTITIES_HPP

#include <vector>

#include "homavg/report.hpp"
#include "homavg/scalar.hpp"

namespace homavg {

/// The q-number identities for m, n in [-M, M]:
/// "brace_add"    {m+n} = {m} + q^m {n}
/// "brace_neg"    q^m {-m} = -{m}
/// "brace_step"   {m+1} = 1 + q {m}
/// "bracket_odd"  [-n] = -[n]
/// "bracket_sub"  q^n [m] - q^m [n] = [m-n]
/// "bracket_add"  q^-n [m] + q^m [n] = [m+n]
/// and, in cyclotomic mode, the zero sets "brace_zero" ({n} = 0 iff q^n = 1,
/// or iff n = 0 when q = 1) and "bracket_zero" ([n] = 0 iff q^2n = 1, for q != +-1).
///
/// Scalars are reported as coefficients of L_0; witness indices are L_m, L_n.
Report check_qnumber_identities(const ScalarField& field, long M);

/// The fields of the standard identity suite: q = 2, q = 1/3, cyclotomic 1..6 and Q(q).
std::vector<ScalarField> identity_suite_fields();

} // namespace homavg

#endif

// Copyright 2026 The homavg Authors
// SPDX-License-Identifier: Apache-2.0

#include "homavg/identities.hpp"

namespace homavg {

namespace {

Element lift(const Scalar& s)
{
    return Element(L(0), s);
}

} // namespace

Report check_qnumber_identities(const ScalarField& f, long M)
{
    Stopwatch sw;
    Report r;
    r.check = "qnumber_identities";
    r.algebra = "none";
    r.field = f.describe();
    r.window = M;
    const Scalar one = f.one(), q = f.q();
    auto expect = [&](std::vector<BasisIndex> idx, const Scalar& lhs, const Scalar& rhs, const char* part) {
        r.expect_equal(std::move(idx), lift(lhs), lift(rhs), part);
    };
    auto flag = [&](bool b) { return b ? one : f.zero(); };
    for (long m = -M; m <= M; ++m) {
        expect({L(m)}, f.q_power(m) * f.brace_num(-m), -f.brace_num(m), "brace_neg");
        expect({L(m)}, f.brace_num(m + 1), one + q * f.brace_num(m), "brace_step");
        expect({L(m)}, f.bracket_num(-m), -f.bracket_num(m), "bracket_odd");
        for (long n = -M; n <= M; ++n) {
            expect({L(m), L(n)}, f.brace_num(m + n), f.brace_num(m) + f.q_power(m) * f.brace_num(n), "brace_add");
            expect({L(m), L(n)}, f.q_power(n) * f.bracket_num(m) - f.q_power(m) * f.bracket_num(n),
                   f.bracket_num(m - n), "bracket_sub");
            expect({L(m), L(n)}, f.q_power(-n) * f.bracket_num(m) + f.q_power(m) * f.bracket_num(n),
                   f.bracket_num(m + n), "bracket_add");
        }
        if (f.kind() == ScalarField::Kind::cyclotomic) {
            const bool brace_zero = f.q_is_one() ? m == 0 : f.q_pow_is_one(m);
            expect({L(m)}, flag(f.brace_num(m).is_zero()), flag(brace_zero), "brace_zero");
            if (!f.q_is_one() && !f.q_is_minus_one()) {
                expect({L(m)}, flag(f.bracket_num(m).is_zero()), flag(f.q_pow_is_one(2 * m)), "bracket_zero");
            }
        }
    }
    for (const char* part : {"brace_add", "brace_neg", "brace_step", "bracket_odd", "bracket_sub", "bracket_add"}) {
        r.sub_verdicts[part] = r.part_ok(part);
    }
    if (f.kind() == ScalarField::Kind::cyclotomic) {
        r.sub_verdicts["brace_zero"] = r.part_ok("brace_zero");
        if (!f.q_is_one() && !f.q_is_minus_one()) {
            r.sub_verdicts["bracket_zero"] = r.part_ok("bracket_zero");
        }
    }
    r.notes.push_back("scalars are shown as coefficients of L_0; zero-set checks compare indicator values");
    r.finalize();
    r.millis = sw.millis();
    return r;
}

std::vector<ScalarField> identity_suite_fields()
{
    std::vector<ScalarField> out{ScalarField::rational(2), ScalarField::rational(mpq_class(1, 3))};
    for (long n = 1; n <= 6; ++n) {
        out.push_back(ScalarField::cyclotomic(n));
    }
    out.push_back(ScalarField::rational_function());
    return out;
}

} // namespace homavg

#include <doctest.h>

#include <random>

#include "homavg/algebra.hpp"
#include "homavg/error.hpp"
#include "homavg/operator.hpp"

using namespace homavg;

namespace {

Element random_element(const HomAlgebra& alg, std::mt19937& rng, long M)
{
    std::uniform_int_distribution<long> deg(-M, M), coef(-3, 3), fam(0, alg.components() - 1);
    Element x;
    for (int i = 0; i < 3; ++i) {
        x.add_term({alg.families()[static_cast<std::size_t>(fam(rng))], deg(rng)}, alg.field().from_long(coef(rng)));
    }
    return x;
}

} // namespace

TEST_CASE("element bookkeeping")
{
    auto f = ScalarField::rational(2);
    Element x(L(1), f.from_long(3));
    x.add_term(L(1), f.from_long(-3));
    CHECK(x.is_zero());
    Element y = Element(L(2), f.one()) + Element(W(-1), f.from_long(5));
    CHECK(y.size() == 2);
    CHECK((y - y).is_zero());
    CHECK((f.zero() * y).is_zero());
    CHECK(y.to_string() == "5*W_-1 + L_2");
    CHECK(L(3) < W(3));
    CHECK(W(2) < L(3));
}

TEST_CASE("bracket examples")
{
    auto one = ScalarField::rational(1);
    auto witt = HomAlgebra::witt(one);
    CHECK(witt.bracket_basis(L(2), L(1)) == Element(L(3), one.one()));
    CHECK(witt.bracket_basis(L(4), L(4)).is_zero());
    CHECK_THROWS_AS(witt.bracket_basis(W(1), L(0)), InvalidBasis);

    auto rf = ScalarField::rational_function();
    auto w22 = HomAlgebra::w22(rf);
    CHECK(w22.bracket_basis(L(1), W(4)) == Element(W(5), -rf.parse("q^2+1+q^-2")));
    CHECK(w22.bracket_basis(W(2), W(5)).is_zero());
    CHECK(w22.bracket_basis(W(4), L(1)) == Element(W(5), rf.parse("q^2+1+q^-2")));
    for (const auto& b : w22.window_basis(3)) {
        CHECK(w22.bracket_basis(b, b).is_zero());
    }
}

TEST_CASE("twist examples")
{
    auto two = ScalarField::rational(2);
    CHECK(HomAlgebra::witt(two).twist_basis(L(3)) == Element(L(3), two.from_long(9)));
    CHECK(HomAlgebra::w22(two).twist_basis(W(2)) == Element(W(2), two.parse("17/4")));
    auto c2 = ScalarField::cyclotomic(2);
    CHECK(HomAlgebra::witt(c2).twist_basis(L(1)).is_zero());
    CHECK(HomAlgebra::witt(two, 2).twist_basis(L(3)) == Element(L(5), two.from_long(3)));
}

TEST_CASE("grading and skew-symmetry of the built-in algebras")
{
    for (const auto& f : {ScalarField::rational(2), ScalarField::cyclotomic(3), ScalarField::rational_function()}) {
        for (long k : {-1L, 0L, 2L}) {
            for (const auto& alg : {HomAlgebra::witt(f, k), HomAlgebra::w22(f, k)}) {
                auto basis = alg.window_basis(8);
                for (const auto& a : basis) {
                    const Element ta = alg.twist_basis(a);
                    for (const auto& [b, c] : ta.terms()) {
                        CHECK(b.degree == a.degree + k);
                    }
                    for (const auto& b : basis) {
                        Element ab = alg.bracket_basis(a, b);
                        for (const auto& [t, c] : ab.terms()) {
                            CHECK(t.degree == a.degree + b.degree);
                        }
                        CHECK((ab + alg.bracket_basis(b, a)).is_zero());
                    }
                }
            }
        }
    }
}

TEST_CASE("bilinearity")
{
    std::mt19937 rng(7);
    for (const auto& f : {ScalarField::rational(mpq_class(1, 3)), ScalarField::cyclotomic(5)}) {
        for (const auto& alg : {HomAlgebra::witt(f), HomAlgebra::w22(f, 1)}) {
            for (int trial = 0; trial < 20; ++trial) {
                Element x = random_element(alg, rng, 4), y = random_element(alg, rng, 4),
                        z = random_element(alg, rng, 4);
                Scalar a = f.from_long(trial - 7), b = f.parse("q+2");
                CHECK(alg.bracket(a * x + b * y, z) == a * alg.bracket(x, z) + b * alg.bracket(y, z));
                CHECK(alg.bracket(z, a * x + b * y) == a * alg.bracket(z, x) + b * alg.bracket(z, y));
                CHECK(alg.twist(a * x + b * y) == a * alg.twist(x) + b * alg.twist(y));
            }
        }
    }
}

TEST_CASE("operator application")
{
    auto f = ScalarField::rational(2);
    auto zero = HomogeneousOperator::zero(f, 1, 3);
    CHECK(zero.apply(Element(L(4), f.one())).is_zero());
    auto id = HomogeneousOperator::identity(f, 1);
    CHECK(id.apply_basis(L(-5)) == Element(L(-5), f.one()));
    auto t_op = HomogeneousOperator::closed_form(f, 1, 1, [f](long t) { return Profile::scalar(f.from_long(t)); });
    CHECK(t_op.apply_basis(L(2)) == Element(L(3), f.from_long(3)));
    CHECK_THROWS_AS(t_op.apply_basis(W(2)), InvalidBasis);

    auto tab = HomogeneousOperator::table(f, 1, 0, {{0, Profile::scalar(f.one())}, {1, Profile::scalar(f.from_long(2))}});
    CHECK(tab.apply_basis(L(1)) == Element(L(1), f.from_long(2)));
    try {
        tab.apply_basis(L(5));
        FAIL("expected DomainError");
    } catch (const DomainError& e) {
        CHECK(e.missing_degrees() == std::vector<long>{5});
    }
    CHECK(tab.missing({-1, 0, 1, 2}) == std::vector<long>{-1, 2});
}

TEST_CASE("operator combinators")
{
    auto f = ScalarField::rational(2);
    auto p = HomogeneousOperator::closed_form(f, 1, 0, [f](long t) { return Profile::scalar(f.one() + f.q_power(t)); });
    auto id = HomogeneousOperator::identity(f, 1);
    auto basis = HomAlgebra::witt(f).window_basis(6);

    auto z = scale(f.zero(), p);
    for (const auto& b : basis) {
        CHECK(z.apply_basis(b).is_zero());
        CHECK(compose(id, p).apply_basis(b) == p.apply_basis(b));
        CHECK(compose(p, inverse(p)).apply_basis(b) == Element(b, f.one()));
        CHECK(compose(inverse(p), p).apply_basis(b) == Element(b, f.one()));
    }
    CHECK(inverse(p).profile(3).f1 == f.parse("1/9"));
    CHECK(inverse(p).profile(-2).f1 == f.parse("4/5"));

    auto shift = HomogeneousOperator::closed_form(f, 1, 2, [f](long) { return Profile::scalar(f.one()); });
    CHECK_THROWS_AS(sum(p, shift), InvalidParameter);
    CHECK_THROWS_AS(inverse(shift), InvalidParameter);
    CHECK_THROWS_AS(polynomial({f.one(), f.one()}, p), InvalidParameter);
    CHECK(compose(shift, p).degree() == 2);

    auto sq = polynomial({f.zero(), f.from_long(3), f.one()}, p); // t^2 + 3t
    CHECK(sq.profile(1).f1 == f.from_long(18));

    auto singular = HomogeneousOperator::closed_form(f, 1, 0, [f](long t) { return Profile::scalar(f.from_long(t)); });
    auto inv = inverse(singular);
    CHECK(inv.profile(2).f1 == f.parse("1/2"));
    try {
        inv.profile(0);
        FAIL("expected SingularAtDegree");
    } catch (const SingularAtDegree& e) {
        CHECK(e.degree() == 0);
    }
}

TEST_CASE("two-dimensional composition and inverse")
{
    auto f = ScalarField::cyclotomic(5);
    auto p = HomogeneousOperator::closed_form(f, 2, 0, [f](long t) {
        return Profile{f.one() + f.q_power(t), f.from_long(2), f.q(), f.from_long(3)};
    });
    auto ip = inverse(p);
    auto alg = HomAlgebra::w22(f);
    for (const auto& b : alg.window_basis(5)) {
        CHECK(compose(p, ip).apply_basis(b) == Element(b, f.one()));
        CHECK(p.apply(ip.apply_basis(b)) == Element(b, f.one()));
    }
    auto d1 = HomogeneousOperator::closed_form(f, 2, 1, [f](long t) {
        return Profile{f.from_long(t), f.one(), f.zero(), f.q_power(t)};
    });
    for (const auto& b : alg.window_basis(4)) {
        CHECK(compose(d1, p).apply_basis(b) == d1.apply(p.apply_basis(b)));
        CHECK(compose(p, d1).apply_basis(b) == p.apply(d1.apply_basis(b)));
    }
}

TEST_CASE("table composition domains")
{
    auto f = ScalarField::rational(3);
    std::map<long, Profile> e1, e2;
    for (long t = -2; t <= 2; ++t) {
        e1[t] = Profile::scalar(f.from_long(t + 5));
        e2[t] = Profile::scalar(f.one());
    }
    auto a = HomogeneousOperator::table(f, 1, 1, e1);
    auto b = HomogeneousOperator::table(f, 1, 0, e2);
    auto c = compose(a, b); // degree 1, t in dom(a) with t-1 in dom(b)
    CHECK(*c.domain() == std::set<long>{-1, 0, 1, 2});
    CHECK(!induced_algebra(HomAlgebra::witt(f), HomogeneousOperator::identity(f, 1)).name().empty());
    CHECK_THROWS_AS(induced_algebra(HomAlgebra::witt(f), a), InvalidParameter);
}

TEST_CASE("induced products")
{
    auto f = ScalarField::rational(1);
    auto witt = HomAlgebra::witt(f);
    auto id = induced_algebra(witt, HomogeneousOperator::identity(f, 1));
    auto zero = induced_algebra(witt, HomogeneousOperator::zero(f, 1, 0));
    for (const auto& a : witt.window_basis(4)) {
        for (const auto& b : witt.window_basis(4)) {
            CHECK(id.bracket_basis(a, b) == witt.bracket_basis(a, b));
            CHECK(zero.bracket_basis(a, b).is_zero());
        }
    }
    // f(t) = beta + nu*delta_{t,0} with beta = nu = 1
    auto p = HomogeneousOperator::closed_form(f, 1, 0, [f](long t) { return Profile::scalar(f.from_long(t == 0 ? 2 : 1)); });
    CHECK(induced_algebra(witt, p).bracket_basis(L(1), L(0)) == Element(L(1), f.one()));
    auto shifted = induced_algebra(witt, HomogeneousOperator::closed_form(f, 1, 2, [f](long) { return Profile::scalar(f.one()); }));
    CHECK(shifted.product_shift() == 2);
    CHECK(shifted.bracket_basis(L(1), L(0)) == Element(L(3), f.from_long(3)));
}

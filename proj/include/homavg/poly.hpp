// Copyright 2026 The homavg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef HOMAVG_POLY_HPP
#define HOMAVG_POLY_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace homavg {

/// Dense univariate polynomial over Q.
///
/// Coefficients are stored lowest degree first and the vector never ends in a
/// zero coefficient, so the zero polynomial is the empty vector and equality of
/// polynomials is equality of coefficient vectors.
class Poly {
public:
    Poly() = default;
    explicit Poly(const mpq_class& c);
    explicit Poly(std::vector<mpq_class> coeffs);

    static Poly monomial(const mpq_class& c, std::size_t k);
    static Poly x() { return monomial(mpq_class(1), 1); }
    static Poly one() { return Poly(mpq_class(1)); }

    const std::vector<mpq_class>& coeffs() const noexcept { return c_; }

    /// Degree, or -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_one() const;
    /// Exactly one nonzero coefficient.
    bool is_monomial() const;

    const mpq_class& lead() const { return c_.back(); }
    mpq_class coeff(std::size_t k) const;
    /// Index of the lowest nonzero coefficient; 0 for the zero polynomial.
    std::size_t low_order() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const mpq_class& s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const mpq_class& s) { return a *= s; }
    Poly operator-() const;

    /// Multiply by x^k.
    Poly shifted_up(std::size_t k) const;
    /// Divide by x^k; requires k <= low_order().
    Poly shifted_down(std::size_t k) const;

    /// Euclidean division a = quo * b + rem with deg rem < deg b.
    static void divmod(const Poly& a, const Poly& b, Poly& quo, Poly& rem);
    static Poly rem(const Poly& a, const Poly& b);
    static Poly quo(const Poly& a, const Poly& b);
    /// Monic greatest common divisor; gcd(0, 0) = 0.
    static Poly gcd(Poly a, Poly b);
    /// s with s*a = 1 (mod modulus); throws ArithmeticError when gcd(a, modulus) != 1.
    static Poly inverse_mod(const Poly& a, const Poly& modulus);

    Poly monic() const;
    mpq_class eval(const mpq_class& at) const;

    /// Human-readable form with descending powers, e.g. "q^2-3/2*q+1".
    std::string to_string(std::string_view var = "q") const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    void trim();

    std::vector<mpq_class> c_;
};

/// The N-th cyclotomic polynomial, obtained by dividing x^N - 1 by the
/// cyclotomic polynomials of all proper divisors of N.
Poly cyclotomic_polynomial(long n);

} // namespace homavg

#endif

// Copyright 2026 The homavg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef HOMAVG_SCALAR_HPP
#define HOMAVG_SCALAR_HPP

#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "homavg/poly.hpp"

namespace homavg {

class Scalar;

/// The base field together with the deformation parameter q.
///
/// Three modes are supported: Q with a fixed rational q, the cyclotomic
/// quotient Q[x]/Phi_N with q the class of x, and the rational function field
/// Q(q). Fields are cheap handles to immutable shared state.
class ScalarField {
public:
    enum class Kind { rational, cyclotomic, rational_function };

    static ScalarField rational(const mpq_class& q);
    static ScalarField cyclotomic(long order);
    static ScalarField rational_function();

    Kind kind() const;
    /// The value of q in rational mode.
    const mpq_class& q_value() const;
    /// N in cyclotomic mode.
    long order() const;
    /// Phi_N in cyclotomic mode.
    const Poly& modulus() const;

    /// Shorthand descriptor: "rational:2", "rational:1/3", "cyclotomic:4", "qfunc".
    std::string describe() const;

    Scalar zero() const;
    Scalar one() const;
    Scalar from(const mpq_class& c) const;
    Scalar from_long(long c) const;
    Scalar q() const;

    /// q^n for any integer n.
    Scalar q_power(long n) const;
    /// Exact test q^n == 1.
    bool q_pow_is_one(long n) const;
    bool q_is_one() const;
    bool q_is_minus_one() const;

    /// {n} = (1 - q^n) / (1 - q), with {n} = n at q = 1.
    Scalar brace_num(long n) const;
    /// [n] = (q^n - q^-n) / (q - q^-1), with [n] = n at q = 1 and (-1)^(n-1) n at q = -1.
    Scalar bracket_num(long n) const;

    /// Parse an expression in q: integers, fractions, q, + - * / ^ and parentheses.
    Scalar parse(std::string_view text) const;

    friend bool operator==(const ScalarField& a, const ScalarField& b);
    friend bool operator!=(const ScalarField& a, const ScalarField& b) { return !(a == b); }

    struct Impl;

private:
    explicit ScalarField(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

    friend class Scalar;
    std::shared_ptr<const Impl> impl_;
};

/// An exact field element in canonical form.
///
/// Rational mode keeps a single reduced fraction, cyclotomic mode a residue of
/// degree below deg Phi_N, rational-function mode a coprime pair with monic
/// denominator. Two scalars are equal iff their representations are identical.
///
/// A default-constructed Scalar is an unbound zero that adopts the field of
/// whatever it is combined with.
class Scalar {
public:
    Scalar() = default;

    const ScalarField& field() const;
    bool bound() const noexcept { return field_.impl_ != nullptr; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const;

    /// Numerator; the whole residue in cyclotomic mode, a constant in rational mode.
    const Poly& num() const noexcept { return num_; }
    /// Denominator; one outside rational-function mode.
    const Poly& den() const noexcept { return den_; }

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const;

    Scalar inverse() const;

    /// Canonical string: "3/4", "q^2+1", "(q^2+1)/(q-1)".
    std::string to_string() const;

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

private:
    Scalar(ScalarField f, Poly num, Poly den);

    void adopt(const Scalar& o);
    void normalize();

    friend class ScalarField;
    ScalarField field_{nullptr};
    Poly num_;
    Poly den_{mpq_class(1)};
};

} // namespace homavg

#endif

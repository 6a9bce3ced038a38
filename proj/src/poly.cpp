// Copyright 2026 The homavg Authors
// SPDX-License-Identifier: Apache-2.0

#include "homavg/poly.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "homavg/error.hpp"

namespace homavg {

Poly::Poly(const mpq_class& c)
{
    if (c != 0) {
        c_.push_back(c);
    }
}

Poly::Poly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs))
{
    trim();
}

Poly Poly::monomial(const mpq_class& c, std::size_t k)
{
    Poly p;
    if (c != 0) {
        p.c_.assign(k + 1, mpq_class(0));
        p.c_[k] = c;
    }
    return p;
}

void Poly::trim()
{
    while (!c_.empty() && c_.back() == 0) {
        c_.pop_back();
    }
}

bool Poly::is_one() const
{
    return c_.size() == 1 && c_[0] == 1;
}

bool Poly::is_monomial() const
{
    if (c_.empty()) {
        return false;
    }
    return std::count_if(c_.begin(), c_.end(), [](const mpq_class& v) { return v != 0; }) == 1;
}

mpq_class Poly::coeff(std::size_t k) const
{
    return k < c_.size() ? c_[k] : mpq_class(0);
}

std::size_t Poly::low_order() const
{
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] != 0) {
            return i;
        }
    }
    return 0;
}

Poly& Poly::operator+=(const Poly& o)
{
    if (o.c_.size() > c_.size()) {
        c_.resize(o.c_.size());
    }
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
        c_[i] += o.c_[i];
    }
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    if (o.c_.size() > c_.size()) {
        c_.resize(o.c_.size());
    }
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
        c_[i] -= o.c_[i];
    }
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero()) {
        return Poly();
    }
    std::vector<mpq_class> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            out[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& o)
{
    *this = *this * o;
    return *this;
}

Poly& Poly::operator*=(const mpq_class& s)
{
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& v : c_) {
        v *= s;
    }
    return *this;
}

Poly Poly::operator-() const
{
    Poly r = *this;
    for (auto& v : r.c_) {
        v = -v;
    }
    return r;
}

Poly Poly::shifted_up(std::size_t k) const
{
    if (is_zero() || k == 0) {
        return *this;
    }
    Poly r;
    r.c_.assign(k, mpq_class(0));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

Poly Poly::shifted_down(std::size_t k) const
{
    if (is_zero() || k == 0) {
        return *this;
    }
    Poly r;
    r.c_.assign(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end());
    return r;
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& quo, Poly& rem)
{
    if (b.is_zero()) {
        throw ArithmeticError("polynomial division by zero");
    }
    rem = a;
    quo = Poly();
    if (a.degree() < b.degree()) {
        return;
    }
    std::vector<mpq_class> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    const mpq_class inv_lead = 1 / b.lead();
    const std::size_t db = static_cast<std::size_t>(b.degree());
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        const std::size_t shift = static_cast<std::size_t>(rem.degree()) - db;
        const mpq_class factor = rem.lead() * inv_lead;
        q[shift] = factor;
        for (std::size_t j = 0; j <= db; ++j) {
            rem.c_[shift + j] -= factor * b.c_[j];
        }
        rem.trim();
    }
    quo = Poly(std::move(q));
}

Poly Poly::rem(const Poly& a, const Poly& b)
{
    Poly q, r;
    divmod(a, b, q, r);
    return r;
}

Poly Poly::quo(const Poly& a, const Poly& b)
{
    Poly q, r;
    divmod(a, b, q, r);
    return q;
}

Poly Poly::monic() const
{
    if (is_zero()) {
        return *this;
    }
    Poly r = *this;
    const mpq_class inv = 1 / lead();
    r *= inv;
    return r;
}

Poly Poly::gcd(Poly a, Poly b)
{
    // gcd with a power of x is read off the low order directly.
    if (a.is_monomial() && !b.is_zero()) {
        return monomial(mpq_class(1), std::min(a.low_order(), b.low_order()));
    }
    if (b.is_monomial() && !a.is_zero()) {
        return monomial(mpq_class(1), std::min(a.low_order(), b.low_order()));
    }
    while (!b.is_zero()) {
        Poly r = rem(a, b).monic();
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly Poly::inverse_mod(const Poly& a, const Poly& modulus)
{
    // Extended Euclid tracking only the cofactor of a.
    Poly r0 = modulus, r1 = rem(a, modulus);
    Poly s0, s1 = one();
    while (!r1.is_zero()) {
        Poly q, r;
        divmod(r0, r1, q, r);
        Poly s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.degree() != 0) {
        throw ArithmeticError("element is not invertible modulo " + modulus.to_string("x"));
    }
    return rem(s0 * (1 / r0.lead()), modulus);
}

mpq_class Poly::eval(const mpq_class& at) const
{
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * at + *it;
    }
    return acc;
}

std::string Poly::to_string(std::string_view var) const
{
    if (c_.empty()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const mpq_class& c = c_[i];
        if (c == 0) {
            continue;
        }
        mpq_class mag = abs(c);
        if (c < 0) {
            out += '-';
        } else if (!out.empty()) {
            out += '+';
        }
        if (i == 0) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1) {
            out += mag.get_str();
            out += '*';
        }
        out += var;
        if (i > 1) {
            out += '^';
            out += std::to_string(i);
        }
    }
    return out;
}

Poly cyclotomic_polynomial(long n)
{
    if (n <= 0) {
        throw InvalidParameter("cyclotomic order must be positive, got " + std::to_string(n));
    }
    std::map<long, Poly> memo;
    for (long m = 1; m <= n; ++m) {
        if (n % m != 0) {
            continue;
        }
        Poly p = Poly::monomial(mpq_class(1), static_cast<std::size_t>(m)) - Poly::one();
        for (const auto& [d, phi] : memo) {
            if (m % d == 0) {
                p = Poly::quo(p, phi);
            }
        }
        memo.emplace(m, std::move(p));
    }
    return memo.at(n);
}

} // namespace homavg

// Copyright 2026 The homavg Authors
// SPDX-License-Identifier: Apache-2.0

#include "homavg/scalar.hpp"

#include <cctype>
#include <cstdlib>
#include <utility>
#include <vector>

#include "homavg/error.hpp"

namespace homavg {

struct ScalarField::Impl {
    Kind kind;
    mpq_class q;
    long order = 0;
    Poly phi;
};

namespace {

mpq_class mpq_pow(const mpq_class& base, long n)
{
    unsigned long e = static_cast<unsigned long>(n < 0 ? -n : n);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
    mpq_class r = n < 0 ? mpq_class(den, num) : mpq_class(num, den);
    r.canonicalize();
    return r;
}

long mod_floor(long a, long n)
{
    long r = a % n;
    return r < 0 ? r + n : r;
}

// Dense coefficient array indexed by exponent modulo N, reduced by Phi_N.
Poly cyclotomic_residue(const std::vector<mpq_class>& by_exponent, const Poly& phi)
{
    Poly p(by_exponent);
    return p.degree() >= phi.degree() ? Poly::rem(p, phi) : p;
}

bool is_multi_term(const std::string& s)
{
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i] == '+' || s[i] == '-' || s[i] == '/') {
            return true;
        }
    }
    return false;
}

} // namespace

// ---------------------------------------------------------------------------
// ScalarField

ScalarField ScalarField::rational(const mpq_class& q)
{
    if (q == 0) {
        throw InvalidParameter("q must be nonzero");
    }
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::rational;
    impl->q = q;
    impl->q.canonicalize();
    return ScalarField(std::move(impl));
}

ScalarField ScalarField::cyclotomic(long order)
{
    if (order <= 0) {
        throw InvalidParameter("cyclotomic order must be positive, got " + std::to_string(order));
    }
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::cyclotomic;
    impl->order = order;
    impl->phi = cyclotomic_polynomial(order);
    return ScalarField(std::move(impl));
}

ScalarField ScalarField::rational_function()
{
    static const ScalarField f = [] {
        auto impl = std::make_shared<Impl>();
        impl->kind = Kind::rational_function;
        return ScalarField(std::move(impl));
    }();
    return f;
}

ScalarField::Kind ScalarField::kind() const
{
    return impl_->kind;
}

const mpq_class& ScalarField::q_value() const
{
    if (impl_->kind != Kind::rational) {
        throw InvalidParameter("q_value is only defined in rational mode");
    }
    return impl_->q;
}

long ScalarField::order() const
{
    return impl_->order;
}

const Poly& ScalarField::modulus() const
{
    return impl_->phi;
}

std::string ScalarField::describe() const
{
    switch (impl_->kind) {
    case Kind::rational:
        return "rational:" + impl_->q.get_str();
    case Kind::cyclotomic:
        return "cyclotomic:" + std::to_string(impl_->order);
    case Kind::rational_function:
        return "qfunc";
    }
    return {};
}

bool operator==(const ScalarField& a, const ScalarField& b)
{
    if (a.impl_ == b.impl_) {
        return true;
    }
    if (!a.impl_ || !b.impl_ || a.impl_->kind != b.impl_->kind) {
        return false;
    }
    switch (a.impl_->kind) {
    case ScalarField::Kind::rational:
        return a.impl_->q == b.impl_->q;
    case ScalarField::Kind::cyclotomic:
        return a.impl_->order == b.impl_->order;
    case ScalarField::Kind::rational_function:
        return true;
    }
    return false;
}

Scalar ScalarField::zero() const
{
    return Scalar(*this, Poly(), Poly::one());
}

Scalar ScalarField::one() const
{
    return from(mpq_class(1));
}

Scalar ScalarField::from(const mpq_class& c) const
{
    Scalar s(*this, Poly(c), Poly::one());
    s.normalize();
    return s;
}

Scalar ScalarField::from_long(long c) const
{
    return from(mpq_class(c));
}

Scalar ScalarField::q() const
{
    return q_power(1);
}

Scalar ScalarField::q_power(long n) const
{
    switch (impl_->kind) {
    case Kind::rational:
        return from(mpq_pow(impl_->q, n));
    case Kind::cyclotomic: {
        std::vector<mpq_class> c(static_cast<std::size_t>(impl_->order));
        c[static_cast<std::size_t>(mod_floor(n, impl_->order))] = 1;
        return Scalar(*this, cyclotomic_residue(c, impl_->phi), Poly::one());
    }
    case Kind::rational_function:
        if (n >= 0) {
            return Scalar(*this, Poly::monomial(mpq_class(1), static_cast<std::size_t>(n)), Poly::one());
        }
        return Scalar(*this, Poly::one(), Poly::monomial(mpq_class(1), static_cast<std::size_t>(-n)));
    }
    return zero();
}

bool ScalarField::q_pow_is_one(long n) const
{
    return q_power(n).is_one();
}

bool ScalarField::q_is_one() const
{
    return q_pow_is_one(1);
}

bool ScalarField::q_is_minus_one() const
{
    return q_power(1) == from_long(-1);
}

Scalar ScalarField::brace_num(long n) const
{
    if (n == 0) {
        return zero();
    }
    if (q_is_one()) {
        return from_long(n);
    }
    // {n} = sum_{j=0}^{n-1} q^j for n > 0 and -sum_{j=n}^{-1} q^j for n < 0.
    const long lo = n > 0 ? 0 : n;
    const long hi = n > 0 ? n - 1 : -1;
    const mpq_class sign = n > 0 ? 1 : -1;
    switch (impl_->kind) {
    case Kind::rational: {
        const mpq_class& q = impl_->q;
        return from((1 - mpq_pow(q, n)) / (1 - q));
    }
    case Kind::cyclotomic: {
        std::vector<mpq_class> c(static_cast<std::size_t>(impl_->order));
        for (long j = lo; j <= hi; ++j) {
            c[static_cast<std::size_t>(mod_floor(j, impl_->order))] += sign;
        }
        return Scalar(*this, cyclotomic_residue(c, impl_->phi), Poly::one());
    }
    case Kind::rational_function: {
        std::vector<mpq_class> c(static_cast<std::size_t>(hi - lo + 1), sign);
        Poly den = Poly::monomial(mpq_class(1), static_cast<std::size_t>(-lo));
        return Scalar(*this, Poly(std::move(c)), std::move(den));
    }
    }
    return zero();
}

Scalar ScalarField::bracket_num(long n) const
{
    if (n == 0) {
        return zero();
    }
    if (q_is_one()) {
        return from_long(n);
    }
    if (q_is_minus_one()) {
        return from_long((n % 2 != 0) ? n : -n);
    }
    // [n] = sum_{j=0}^{|n|-1} q^{|n|-1-2j}, odd in n.
    const long a = n > 0 ? n : -n;
    const mpq_class sign = n > 0 ? 1 : -1;
    switch (impl_->kind) {
    case Kind::rational: {
        const mpq_class& q = impl_->q;
        return from((mpq_pow(q, n) - mpq_pow(q, -n)) / (q - 1 / q));
    }
    case Kind::cyclotomic: {
        std::vector<mpq_class> c(static_cast<std::size_t>(impl_->order));
        for (long j = 0; j < a; ++j) {
            c[static_cast<std::size_t>(mod_floor(a - 1 - 2 * j, impl_->order))] += sign;
        }
        return Scalar(*this, cyclotomic_residue(c, impl_->phi), Poly::one());
    }
    case Kind::rational_function: {
        // Multiply through by q^{a-1}: exponents a-1-2j+a-1 = 2(a-1-j).
        std::vector<mpq_class> c(static_cast<std::size_t>(2 * (a - 1) + 1));
        for (long j = 0; j < a; ++j) {
            c[static_cast<std::size_t>(2 * (a - 1 - j))] = sign;
        }
        Poly den = Poly::monomial(mpq_class(1), static_cast<std::size_t>(a - 1));
        Scalar s(*this, Poly(std::move(c)), std::move(den));
        s.normalize();
        return s;
    }
    }
    return zero();
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
public:
    Parser(const ScalarField& f, std::string_view text) : f_(f), s_(text) {}

    Scalar run()
    {
        Scalar v = expr();
        skip();
        if (pos_ != s_.size()) {
            fail("unexpected character");
        }
        return v;
    }

private:
    [[noreturn]] void fail(const char* what) const
    {
        throw InvalidParameter(std::string("cannot parse scalar '") + std::string(s_) + "': " + what +
                               " at offset " + std::to_string(pos_));
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
    }

    bool peek(char c)
    {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool starts_factor()
    {
        skip();
        if (pos_ >= s_.size()) {
            return false;
        }
        char c = s_[pos_];
        return c == 'q' || c == '(' || std::isdigit(static_cast<unsigned char>(c));
    }

    Scalar expr()
    {
        Scalar v = term();
        for (;;) {
            if (peek('+')) {
                ++pos_;
                v += term();
            } else if (peek('-')) {
                ++pos_;
                v -= term();
            } else {
                return v;
            }
        }
    }

    Scalar term()
    {
        Scalar v = unary();
        for (;;) {
            if (peek('*')) {
                ++pos_;
                v *= unary();
            } else if (peek('/')) {
                ++pos_;
                v /= unary();
            } else if (starts_factor()) {
                v *= power();
            } else {
                return v;
            }
        }
    }

    Scalar unary()
    {
        if (peek('-')) {
            ++pos_;
            return -unary();
        }
        if (peek('+')) {
            ++pos_;
            return unary();
        }
        return power();
    }

    Scalar power()
    {
        Scalar base = primary();
        if (!peek('^')) {
            return base;
        }
        ++pos_;
        skip();
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            neg = s_[pos_] == '-';
            ++pos_;
        }
        mpz_class e = integer();
        if (!e.fits_slong_p()) {
            fail("exponent too large");
        }
        long n = e.get_si();
        if (base == f_.q()) {
            return f_.q_power(neg ? -n : n);
        }
        Scalar r = f_.one();
        for (long i = 0; i < n; ++i) {
            r *= base;
        }
        return neg ? r.inverse() : r;
    }

    Scalar primary()
    {
        skip();
        if (pos_ >= s_.size()) {
            fail("unexpected end of input");
        }
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Scalar v = expr();
            if (!peek(')')) {
                fail("expected ')'");
            }
            ++pos_;
            return v;
        }
        if (c == 'q') {
            ++pos_;
            return f_.q();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return f_.from(mpq_class(integer()));
        }
        fail("expected a number, q or '('");
    }

    mpz_class integer()
    {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected digits");
        }
        return mpz_class(std::string(s_.substr(start, pos_ - start)));
    }

    const ScalarField& f_;
    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace

Scalar ScalarField::parse(std::string_view text) const
{
    return Parser(*this, text).run();
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(ScalarField f, Poly num, Poly den) : field_(std::move(f)), num_(std::move(num)), den_(std::move(den))
{
}

const ScalarField& Scalar::field() const
{
    if (!bound()) {
        throw InvalidParameter("scalar is not bound to a field");
    }
    return field_;
}

bool Scalar::is_one() const
{
    return num_.is_one() && den_.is_one();
}

void Scalar::adopt(const Scalar& o)
{
    if (!o.bound()) {
        return;
    }
    if (!bound()) {
        field_ = o.field_;
        return;
    }
    if (field_.impl_ != o.field_.impl_ && !(field_ == o.field_)) {
        throw InvalidParameter("mixed scalar fields: " + field_.describe() + " and " + o.field_.describe());
    }
}

void Scalar::normalize()
{
    if (!bound()) {
        return;
    }
    switch (field_.impl_->kind) {
    case ScalarField::Kind::rational:
        return;
    case ScalarField::Kind::cyclotomic:
        if (num_.degree() >= field_.impl_->phi.degree()) {
            num_ = Poly::rem(num_, field_.impl_->phi);
        }
        return;
    case ScalarField::Kind::rational_function:
        break;
    }
    if (num_.is_zero()) {
        den_ = Poly::one();
        return;
    }
    if (den_.is_constant()) {
        if (!den_.is_one()) {
            num_ *= 1 / den_.lead();
            den_ = Poly::one();
        }
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (!g.is_one()) {
        if (g.is_monomial()) {
            num_ = num_.shifted_down(g.low_order());
            den_ = den_.shifted_down(g.low_order());
        } else {
            num_ = Poly::quo(num_, g);
            den_ = Poly::quo(den_, g);
        }
    }
    if (den_.lead() != 1) {
        const mpq_class inv = 1 / den_.lead();
        num_ *= inv;
        den_ *= inv;
    }
}

Scalar& Scalar::operator+=(const Scalar& o)
{
    adopt(o);
    if (o.is_zero()) {
        return *this;
    }
    if (den_ == o.den_) {
        num_ += o.num_;
    } else if (den_.is_monomial() && o.den_.is_monomial()) {
        const std::size_t a = den_.low_order(), b = o.den_.low_order();
        if (a >= b) {
            num_ += o.num_.shifted_up(a - b);
        } else {
            num_ = num_.shifted_up(b - a) + o.num_;
            den_ = o.den_;
        }
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o)
{
    return *this += -o;
}

Scalar& Scalar::operator*=(const Scalar& o)
{
    adopt(o);
    if (is_zero()) {
        return *this;
    }
    if (o.is_zero()) {
        num_ = Poly();
        den_ = Poly::one();
        return *this;
    }
    num_ *= o.num_;
    if (!o.den_.is_one()) {
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

Scalar Scalar::inverse() const
{
    if (is_zero()) {
        throw ArithmeticError("division by zero");
    }
    if (!bound()) {
        throw InvalidParameter("scalar is not bound to a field");
    }
    switch (field_.impl_->kind) {
    case ScalarField::Kind::rational:
        return Scalar(field_, Poly(1 / num_.lead()), Poly::one());
    case ScalarField::Kind::cyclotomic:
        return Scalar(field_, Poly::inverse_mod(num_, field_.impl_->phi), Poly::one());
    case ScalarField::Kind::rational_function: {
        Scalar r(field_, den_, num_);
        r.normalize();
        return r;
    }
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o)
{
    adopt(o);
    if (o.is_zero()) {
        throw ArithmeticError("division by zero");
    }
    Scalar inv = o.bound() ? o.inverse() : o;
    return *this *= inv;
}

Scalar Scalar::operator-() const
{
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

std::string Scalar::to_string() const
{
    if (!bound() || field_.impl_->kind == ScalarField::Kind::rational) {
        return num_.is_zero() ? "0" : num_.lead().get_str();
    }
    std::string n = num_.to_string("q");
    if (den_.is_one()) {
        return n;
    }
    std::string d = den_.to_string("q");
    if (is_multi_term(n)) {
        n = "(" + n + ")";
    }
    if (is_multi_term(d)) {
        d = "(" + d + ")";
    }
    return n + "/" + d;
}

bool operator==(const Scalar& a, const Scalar& b)
{
    if (a.bound() && b.bound() && !(a.field_ == b.field_)) {
        throw InvalidParameter("mixed scalar fields: " + a.field_.describe() + " and " + b.field_.describe());
    }
    return a.num_ == b.num_ && a.den_ == b.den_;
}

} // namespace homavg

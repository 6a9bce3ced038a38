// Copyright 2026 The homavg Authors
// SPDX-License-Identifier: Apache-2.0

#include "homavg/algebra.hpp"

#include <algorithm>
#include <utility>

#include "homavg/error.hpp"

namespace homavg {

struct HomAlgebra::Data {
    std::string name;
    ScalarField field = ScalarField::rational_function();
    std::vector<Family> families;
    long twist_degree = 0;
    long product_shift = 0;
    BracketRule bracket;
    TwistRule twist;
};

HomAlgebra HomAlgebra::witt(const ScalarField& field, long k)
{
    BracketRule br = [field](const BasisIndex& a, const BasisIndex& b) {
        return Element(L(a.degree + b.degree), field.brace_num(a.degree) - field.brace_num(b.degree));
    };
    TwistRule tw = [field, k](const BasisIndex& a) {
        return Element(L(a.degree + k), field.one() + field.q_power(a.degree - k));
    };
    return custom("witt-q", field, {Family::L}, k, 0, std::move(br), std::move(tw));
}

HomAlgebra HomAlgebra::w22(const ScalarField& field, long k)
{
    BracketRule br = [field](const BasisIndex& a, const BasisIndex& b) {
        if (a.family == Family::W && b.family == Family::W) {
            return Element();
        }
        // [L,L] -> L; [L,W] and [W,L] -> W, both with coefficient [m-n].
        const Family out = (a.family == Family::L && b.family == Family::L) ? Family::L : Family::W;
        return Element({out, a.degree + b.degree}, field.bracket_num(a.degree - b.degree));
    };
    TwistRule tw = [field, k](const BasisIndex& a) {
        return Element({a.family, a.degree + k}, field.q_power(a.degree - k) + field.q_power(k - a.degree));
    };
    return custom("w22-q", field, {Family::L, Family::W}, k, 0, std::move(br), std::move(tw));
}

HomAlgebra HomAlgebra::custom(std::string name, const ScalarField& field, std::vector<Family> families,
                              long twist_degree, long product_shift, BracketRule bracket, TwistRule twist)
{
    if (families.empty()) {
        throw InvalidParameter("an algebra needs at least one basis family");
    }
    auto d = std::make_shared<Data>();
    d->name = std::move(name);
    d->field = field;
    d->families = std::move(families);
    d->twist_degree = twist_degree;
    d->product_shift = product_shift;
    d->bracket = std::move(bracket);
    d->twist = std::move(twist);
    return HomAlgebra(std::move(d));
}

const std::string& HomAlgebra::name() const
{
    return d_->name;
}

const ScalarField& HomAlgebra::field() const
{
    return d_->field;
}

const std::vector<Family>& HomAlgebra::families() const
{
    return d_->families;
}

bool HomAlgebra::has_family(Family f) const
{
    return std::find(d_->families.begin(), d_->families.end(), f) != d_->families.end();
}

long HomAlgebra::twist_degree() const
{
    return d_->twist_degree;
}

long HomAlgebra::product_shift() const
{
    return d_->product_shift;
}

void HomAlgebra::validate(const BasisIndex& b) const
{
    if (!has_family(b.family)) {
        throw InvalidBasis("basis symbol " + b.to_string() + " does not belong to " + d_->name);
    }
}

Element HomAlgebra::bracket_basis(const BasisIndex& a, const BasisIndex& b) const
{
    validate(a);
    validate(b);
    return d_->bracket(a, b);
}

Element HomAlgebra::twist_basis(const BasisIndex& a) const
{
    validate(a);
    return d_->twist(a);
}

Element HomAlgebra::bracket(const Element& x, const Element& y) const
{
    Element out;
    for (const auto& [a, ca] : x.terms()) {
        for (const auto& [b, cb] : y.terms()) {
            Element t = bracket_basis(a, b);
            if (!t.is_zero()) {
                t *= ca * cb;
                out += t;
            }
        }
    }
    return out;
}

Element HomAlgebra::twist(const Element& x) const
{
    Element out;
    for (const auto& [a, c] : x.terms()) {
        Element t = twist_basis(a);
        t *= c;
        out += t;
    }
    return out;
}

std::vector<BasisIndex> HomAlgebra::window_basis(long M) const
{
    std::vector<BasisIndex> out;
    for (long n = -M; n <= M; ++n) {
        for (Family f : d_->families) {
            out.push_back({f, n});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

HomAlgebra induced_algebra(const HomAlgebra& alg, const HomogeneousOperator& p)
{
    if (p.is_table()) {
        throw InvalidParameter("induced algebra requires a closed-form operator, got table '" + p.label() + "'");
    }
    if (p.field() != alg.field()) {
        throw InvalidParameter("operator and algebra are over different fields");
    }
    if (p.components() != alg.components()) {
        throw InvalidParameter("operator and algebra have different component dimensions");
    }
    HomAlgebra::BracketRule br = [alg, p](const BasisIndex& a, const BasisIndex& b) {
        return alg.bracket(p.apply_basis(a), Element::basis(alg.field(), b));
    };
    HomAlgebra::TwistRule tw = [alg](const BasisIndex& a) { return alg.twist_basis(a); };
    return HomAlgebra::custom("induced(" + alg.name() + "," + p.label() + ")", alg.field(), alg.families(),
                              alg.twist_degree(), alg.product_shift() + p.degree(), std::move(br), std::move(tw));
}

} // namespace homavg

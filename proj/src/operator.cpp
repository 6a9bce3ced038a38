// Copyright 2026 The homavg Authors
// SPDX-License-Identifier: Apache-2.0

#include "homavg/operator.hpp"

#include <algorithm>
#include <utility>

#include "homavg/error.hpp"

namespace homavg {

Profile operator*(const Profile& a, const Profile& b)
{
    return {a.f1 * b.f1 + a.f2 * b.g1, a.f1 * b.f2 + a.f2 * b.g2, a.g1 * b.f1 + a.g2 * b.g1,
            a.g1 * b.f2 + a.g2 * b.g2};
}

Profile operator+(const Profile& a, const Profile& b)
{
    return {a.f1 + b.f1, a.f2 + b.f2, a.g1 + b.g1, a.g2 + b.g2};
}

Profile operator*(const Scalar& s, const Profile& a)
{
    return {s * a.f1, s * a.f2, s * a.g1, s * a.g2};
}

bool operator==(const Profile& a, const Profile& b)
{
    return a.f1 == b.f1 && a.f2 == b.f2 && a.g1 == b.g1 && a.g2 == b.g2;
}

struct HomogeneousOperator::Data {
    ScalarField field = ScalarField::rational_function();
    int components = 1;
    long degree = 0;
    Rule rule;
    std::optional<std::set<long>> domain;
    std::string label;
};

namespace {

void check_components(int c)
{
    if (c != 1 && c != 2) {
        throw InvalidParameter("operators act on components of dimension 1 or 2, got " + std::to_string(c));
    }
}

std::optional<std::set<long>> intersect(const std::optional<std::set<long>>& a, const std::optional<std::set<long>>& b)
{
    if (!a) {
        return b;
    }
    if (!b) {
        return a;
    }
    std::set<long> out;
    std::set_intersection(a->begin(), a->end(), b->begin(), b->end(), std::inserter(out, out.end()));
    return out;
}

std::optional<std::set<long>> shifted(const std::optional<std::set<long>>& a, long by)
{
    if (!a) {
        return a;
    }
    std::set<long> out;
    for (long t : *a) {
        out.insert(t + by);
    }
    return out;
}

void check_compatible(const HomogeneousOperator& p, const HomogeneousOperator& q)
{
    if (p.field() != q.field()) {
        throw InvalidParameter("operators over different fields: " + p.field().describe() + " and " +
                               q.field().describe());
    }
    if (p.components() != q.components()) {
        throw InvalidParameter("operators on components of different dimension");
    }
}

} // namespace

HomogeneousOperator make_derived(const HomogeneousOperator& like, long degree, HomogeneousOperator::Rule rule,
                                 std::optional<std::set<long>> domain, std::string label)
{
    auto d = std::make_shared<HomogeneousOperator::Data>();
    d->field = like.field();
    d->components = like.components();
    d->degree = degree;
    d->rule = std::move(rule);
    d->domain = std::move(domain);
    d->label = std::move(label);
    return HomogeneousOperator(std::move(d));
}

HomogeneousOperator HomogeneousOperator::closed_form(const ScalarField& field, int components, long degree, Rule rule,
                                                     std::string label)
{
    check_components(components);
    auto d = std::make_shared<Data>();
    d->field = field;
    d->components = components;
    d->degree = degree;
    d->rule = std::move(rule);
    d->label = std::move(label);
    return HomogeneousOperator(std::move(d));
}

HomogeneousOperator HomogeneousOperator::table(const ScalarField& field, int components, long degree,
                                               std::map<long, Profile> entries, std::string label)
{
    check_components(components);
    std::set<long> dom;
    for (auto& [t, p] : entries) {
        if (components == 1 && !(p.f2.is_zero() && p.g1.is_zero() && p.g2.is_zero())) {
            throw InvalidParameter("one-dimensional operator table has a W entry at degree " + std::to_string(t));
        }
        for (Scalar* s : {&p.f1, &p.f2, &p.g1, &p.g2}) {
            if (!s->bound()) {
                *s = field.zero();
            } else if (s->field() != field) {
                throw InvalidParameter("table entry over a different field at degree " + std::to_string(t));
            }
        }
        dom.insert(t);
    }
    auto shared = std::make_shared<const std::map<long, Profile>>(std::move(entries));
    auto d = std::make_shared<Data>();
    d->field = field;
    d->components = components;
    d->degree = degree;
    d->rule = [shared](long t) { return shared->at(t); };
    d->domain = std::move(dom);
    d->label = label.empty() ? "table" : std::move(label);
    return HomogeneousOperator(std::move(d));
}

HomogeneousOperator HomogeneousOperator::identity(const ScalarField& field, int components)
{
    Profile id{field.one(), field.zero(), field.zero(), components == 2 ? field.one() : field.zero()};
    return closed_form(field, components, 0, [id](long) { return id; }, "identity");
}

HomogeneousOperator HomogeneousOperator::zero(const ScalarField& field, int components, long degree)
{
    Profile z{field.zero(), field.zero(), field.zero(), field.zero()};
    return closed_form(field, components, degree, [z](long) { return z; }, "zero");
}

long HomogeneousOperator::degree() const
{
    return d_->degree;
}

int HomogeneousOperator::components() const
{
    return d_->components;
}

const ScalarField& HomogeneousOperator::field() const
{
    return d_->field;
}

const std::string& HomogeneousOperator::label() const
{
    return d_->label;
}

bool HomogeneousOperator::is_table() const
{
    return d_->domain.has_value();
}

const std::optional<std::set<long>>& HomogeneousOperator::domain() const
{
    return d_->domain;
}

bool HomogeneousOperator::covers(long t) const
{
    return !d_->domain || d_->domain->count(t) != 0;
}

std::vector<long> HomogeneousOperator::missing(const std::set<long>& wanted) const
{
    std::vector<long> out;
    for (long t : wanted) {
        if (!covers(t)) {
            out.push_back(t);
        }
    }
    return out;
}

Profile HomogeneousOperator::profile(long t) const
{
    if (!covers(t)) {
        throw DomainError("operator '" + d_->label + "' is not defined at output degree " + std::to_string(t), {t});
    }
    return d_->rule(t);
}

Element HomogeneousOperator::apply_basis(const BasisIndex& b) const
{
    if (d_->components == 1 && b.family != Family::L) {
        throw InvalidBasis("basis symbol " + b.to_string() + " is not in a one-dimensional grading");
    }
    const long t = b.degree + d_->degree;
    const Profile p = profile(t);
    Element out;
    if (b.family == Family::L) {
        out.add_term(L(t), p.f1);
        if (d_->components == 2) {
            out.add_term(W(t), p.g1);
        }
    } else {
        out.add_term(L(t), p.f2);
        out.add_term(W(t), p.g2);
    }
    return out;
}

Element HomogeneousOperator::apply(const Element& x) const
{
    Element out;
    for (const auto& [b, c] : x.terms()) {
        Element img = apply_basis(b);
        img *= c;
        out += img;
    }
    return out;
}

HomogeneousOperator HomogeneousOperator::with_label(std::string label) const
{
    auto d = std::make_shared<Data>(*d_);
    d->label = std::move(label);
    return HomogeneousOperator(std::move(d));
}

HomogeneousOperator scale(const Scalar& lambda, const HomogeneousOperator& p)
{
    if (lambda.bound() && lambda.field() != p.field()) {
        throw InvalidParameter("scale factor over a different field");
    }
    return make_derived(
        p, p.degree(), [p, lambda](long t) { return lambda * p.profile(t); }, p.domain(),
        lambda.to_string() + "*(" + p.label() + ")");
}

HomogeneousOperator sum(const HomogeneousOperator& p, const HomogeneousOperator& q)
{
    check_compatible(p, q);
    if (p.degree() != q.degree()) {
        throw InvalidParameter("sum of operators of degrees " + std::to_string(p.degree()) + " and " +
                               std::to_string(q.degree()));
    }
    return make_derived(
        p, p.degree(), [p, q](long t) { return p.profile(t) + q.profile(t); }, intersect(p.domain(), q.domain()),
        "(" + p.label() + ")+(" + q.label() + ")");
}

HomogeneousOperator compose(const HomogeneousOperator& p, const HomogeneousOperator& q)
{
    check_compatible(p, q);
    const long dp = p.degree();
    auto dom = intersect(p.domain(), shifted(q.domain(), dp));
    if (dom && dom->empty() && (p.is_table() || q.is_table())) {
        throw InvalidParameter("composition of table-backed operators has an empty domain");
    }
    return make_derived(
        p, dp + q.degree(), [p, q, dp](long t) { return p.profile(t) * q.profile(t - dp); }, std::move(dom),
        "(" + p.label() + ")o(" + q.label() + ")");
}

HomogeneousOperator polynomial(const std::vector<Scalar>& coeffs, const HomogeneousOperator& p)
{
    if (p.degree() != 0) {
        throw InvalidParameter("polynomials are only formed from degree-0 operators");
    }
    if (!coeffs.empty() && !coeffs[0].is_zero()) {
        throw InvalidParameter("polynomial must have zero constant term");
    }
    std::string label = "F(" + p.label() + ")";
    return make_derived(
        p, 0,
        [p, coeffs](long t) {
            const Profile m = p.profile(t);
            Profile power = m;
            Profile acc{p.field().zero(), p.field().zero(), p.field().zero(), p.field().zero()};
            for (std::size_t i = 1; i < coeffs.size(); ++i) {
                if (i > 1) {
                    power = power * m;
                }
                if (!coeffs[i].is_zero()) {
                    acc = acc + coeffs[i] * power;
                }
            }
            return acc;
        },
        p.domain(), std::move(label));
}

HomogeneousOperator inverse(const HomogeneousOperator& p)
{
    if (p.degree() != 0) {
        throw InvalidParameter("only degree-0 operators can be inverted per degree");
    }
    const bool one_dim = p.components() == 1;
    return make_derived(
        p, 0,
        [p, one_dim](long t) {
            const Profile m = p.profile(t);
            const ScalarField& f = p.field();
            if (one_dim) {
                if (m.f1.is_zero()) {
                    throw SingularAtDegree(t);
                }
                return Profile{m.f1.inverse(), f.zero(), f.zero(), f.zero()};
            }
            const Scalar det = m.f1 * m.g2 - m.f2 * m.g1;
            if (det.is_zero()) {
                throw SingularAtDegree(t);
            }
            const Scalar inv = det.inverse();
            return Profile{inv * m.g2, -(inv * m.f2), -(inv * m.g1), inv * m.f1};
        },
        p.domain(), "(" + p.label() + ")^-1");
}

} // namespace homavg

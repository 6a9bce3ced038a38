// Copyright 2026 The homavg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef HOMAVG_OPERATOR_HPP
#define HOMAVG_OPERATOR_HPP

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "homavg/element.hpp"
#include "homavg/scalar.hpp"

namespace homavg {

/// Per-degree coefficient matrix of a homogeneous operator, indexed by the
/// output degree t:
///
///   P(L_{t-d}) = f1(t) L_t + g1(t) W_t
///   P(W_{t-d}) = f2(t) L_t + g2(t) W_t
///
/// As a matrix acting on coordinate columns (L, W) this is [[f1, f2], [g1, g2]].
struct Profile {
    Scalar f1, f2, g1, g2;

    static Profile scalar(const Scalar& f) { return {f, Scalar(), Scalar(), Scalar()}; }

    bool is_zero() const { return f1.is_zero() && f2.is_zero() && g1.is_zero() && g2.is_zero(); }

    friend Profile operator*(const Profile& a, const Profile& b);
    friend Profile operator+(const Profile& a, const Profile& b);
    friend Profile operator*(const Scalar& s, const Profile& a);
    friend bool operator==(const Profile& a, const Profile& b);
};

/// Linear operator of degree d on an algebra whose homogeneous components have
/// one (Witt) or two (W(2,2)) basis symbols.
///
/// A closed-form operator is total on Z. A table-backed operator knows its
/// profile only on an explicit finite set of output degrees and raises
/// DomainError anywhere else; it never falls back to zero.
class HomogeneousOperator {
public:
    using Rule = std::function<Profile(long t)>;

    static HomogeneousOperator closed_form(const ScalarField& field, int components, long degree, Rule rule,
                                           std::string label = {});
    static HomogeneousOperator table(const ScalarField& field, int components, long degree,
                                     std::map<long, Profile> entries, std::string label = {});
    static HomogeneousOperator identity(const ScalarField& field, int components);
    static HomogeneousOperator zero(const ScalarField& field, int components, long degree);

    long degree() const;
    /// Dimension of each homogeneous component: 1 for Witt, 2 for W(2,2).
    int components() const;
    const ScalarField& field() const;
    const std::string& label() const;

    bool is_table() const;
    /// Output degrees covered by a table-backed operator; empty optional when total.
    const std::optional<std::set<long>>& domain() const;
    bool covers(long t) const;
    /// Sorted list of the degrees in `wanted` that are not covered.
    std::vector<long> missing(const std::set<long>& wanted) const;

    /// Profile at output degree t; DomainError outside the table domain.
    Profile profile(long t) const;

    Element apply_basis(const BasisIndex& b) const;
    Element apply(const Element& x) const;

    HomogeneousOperator with_label(std::string label) const;

private:
    struct Data;
    explicit HomogeneousOperator(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
    std::shared_ptr<const Data> d_;

    friend HomogeneousOperator make_derived(const HomogeneousOperator&, long, Rule, std::optional<std::set<long>>,
                                            std::string);
};

/// lambda * P.
HomogeneousOperator scale(const Scalar& lambda, const HomogeneousOperator& p);
/// P + Q; degrees must agree.
HomogeneousOperator sum(const HomogeneousOperator& p, const HomogeneousOperator& q);
/// P o Q, of degree d_P + d_Q, with M_{PQ}(t) = M_P(t) M_Q(t - d_P).
HomogeneousOperator compose(const HomogeneousOperator& p, const HomogeneousOperator& q);
/// F(P) = sum_i c_i P^i for coefficients c_0, c_1, ...; requires c_0 = 0 and deg P = 0.
HomogeneousOperator polynomial(const std::vector<Scalar>& coeffs, const HomogeneousOperator& p);
/// Per-degree inverse of a degree-0 operator, evaluated lazily; SingularAtDegree on demand.
HomogeneousOperator inverse(const HomogeneousOperator& p);

} // namespace homavg

#endif

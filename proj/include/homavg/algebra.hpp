// Copyright 2026 The homavg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef HOMAVG_ALGEBRA_HPP
#define HOMAVG_ALGEBRA_HPP

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "homavg/element.hpp"
#include "homavg/operator.hpp"
#include "homavg/scalar.hpp"

namespace homavg {

/// A Z-graded Hom-algebra given by structure-constant rules on basis symbols.
///
/// The bracket of degrees m and n lands in degree m + n + product_shift and the
/// twist of degree m lands in degree m + twist_degree. Built-in algebras have
/// product_shift 0; induced products {x, y} = [P(x), y] shift by deg P.
class HomAlgebra {
public:
    using BracketRule = std::function<Element(const BasisIndex&, const BasisIndex&)>;
    using TwistRule = std::function<Element(const BasisIndex&)>;

    /// q-deformed Witt algebra: [L_m, L_n] = ({m} - {n}) L_{m+n}, alpha_k(L_n) = (1 + q^{n-k}) L_{n+k}.
    static HomAlgebra witt(const ScalarField& field, long k = 0);
    /// q-deformed W(2,2) algebra with twist beta_k(X_n) = (q^{n-k} + q^{k-n}) X_{n+k}.
    static HomAlgebra w22(const ScalarField& field, long k = 0);
    /// Arbitrary rules over the given families; used for sabotaged controls.
    static HomAlgebra custom(std::string name, const ScalarField& field, std::vector<Family> families,
                             long twist_degree, long product_shift, BracketRule bracket, TwistRule twist);

    const std::string& name() const;
    const ScalarField& field() const;
    const std::vector<Family>& families() const;
    int components() const { return static_cast<int>(families().size()); }
    bool has_family(Family f) const;
    long twist_degree() const;
    long product_shift() const;

    /// Throws InvalidBasis when b's family is not part of this algebra.
    void validate(const BasisIndex& b) const;

    Element bracket_basis(const BasisIndex& a, const BasisIndex& b) const;
    Element twist_basis(const BasisIndex& a) const;
    Element bracket(const Element& x, const Element& y) const;
    Element twist(const Element& x) const;

    /// All basis symbols with |degree| <= M, ordered by degree then family.
    std::vector<BasisIndex> window_basis(long M) const;

private:
    struct Data;
    explicit HomAlgebra(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
    std::shared_ptr<const Data> d_;
};

/// The product {x, y} = [P(x), y] with the same twist. P must be closed-form.
HomAlgebra induced_algebra(const HomAlgebra& alg, const HomogeneousOperator& p);

} // namespace homavg

#endif

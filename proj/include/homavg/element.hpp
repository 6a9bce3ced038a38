// Copyright 2026 The homavg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef HOMAVG_ELEMENT_HPP
#define HOMAVG_ELEMENT_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "homavg/scalar.hpp"

namespace homavg {

enum class Family : std::uint8_t { L = 0, W = 1 };

char family_letter(Family f);

/// A basis symbol L_n or W_n.
struct BasisIndex {
    Family family = Family::L;
    long degree = 0;

    /// Ordered by degree first, then family.
    friend auto operator<=>(const BasisIndex& a, const BasisIndex& b)
    {
        if (auto c = a.degree <=> b.degree; c != 0) {
            return c;
        }
        return a.family <=> b.family;
    }
    friend bool operator==(const BasisIndex&, const BasisIndex&) = default;

    std::string to_string() const;
};

inline BasisIndex L(long n) { return {Family::L, n}; }
inline BasisIndex W(long n) { return {Family::W, n}; }

/// Finitely supported linear combination of basis symbols.
///
/// Zero coefficients are never stored, so structural equality is equality of
/// vectors.
class Element {
public:
    using Terms = std::map<BasisIndex, Scalar>;

    Element() = default;
    Element(const BasisIndex& b, const Scalar& c) { add_term(b, c); }

    static Element basis(const ScalarField& f, const BasisIndex& b) { return Element(b, f.one()); }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    /// Coefficient of b, or an unbound zero.
    Scalar coeff(const BasisIndex& b) const;

    void add_term(const BasisIndex& b, const Scalar& c);

    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element& operator*=(const Scalar& s);

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const Scalar& s, Element a) { return a *= s; }
    Element operator-() const;

    /// "0", or e.g. "3*L_2 + (q^2+1)/q*W_-1".
    std::string to_string() const;

    friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
};

} // namespace homavg

#endif

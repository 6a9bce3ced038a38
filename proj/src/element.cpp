// Copyright 2026 The homavg Authors
// SPDX-License-Identifier: Apache-2.0

#include "homavg/element.hpp"

namespace homavg {

char family_letter(Family f)
{
    return f == Family::L ? 'L' : 'W';
}

std::string BasisIndex::to_string() const
{
    return std::string(1, family_letter(family)) + "_" + std::to_string(degree);
}

Scalar Element::coeff(const BasisIndex& b) const
{
    auto it = terms_.find(b);
    return it == terms_.end() ? Scalar() : it->second;
}

void Element::add_term(const BasisIndex& b, const Scalar& c)
{
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

Element& Element::operator+=(const Element& o)
{
    for (const auto& [b, c] : o.terms_) {
        add_term(b, c);
    }
    return *this;
}

Element& Element::operator-=(const Element& o)
{
    for (const auto& [b, c] : o.terms_) {
        add_term(b, -c);
    }
    return *this;
}

Element& Element::operator*=(const Scalar& s)
{
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [b, c] : terms_) {
        c *= s;
    }
    return *this;
}

Element Element::operator-() const
{
    Element r = *this;
    for (auto& [b, c] : r.terms_) {
        c = -c;
    }
    return r;
}

std::string Element::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    for (const auto& [b, c] : terms_) {
        if (!out.empty()) {
            out += " + ";
        }
        if (!c.is_one()) {
            std::string s = c.to_string();
            bool wrap = s.find_first_of("+-", 1) != std::string::npos;
            out += wrap ? "(" + s + ")" : s;
            out += '*';
        }
        out += b.to_string();
    }
    return out;
}

} // namespace homavg

// Copyright 2026 The homavg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef HOMAVG_FAMILIES_HPP
#define HOMAVG_FAMILIES_HPP

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "homavg/algebra.hpp"
#include "homavg/operator.hpp"
#include "homavg/report.hpp"

namespace homavg {

/// Classified averaging operators on the Witt algebra, profile f(t) at output degree t:
///   1: beta + nu*delta_{t+d,0}                       (q = 1)
///   2: mu*gamma*t/(t+d) for t != -d, 0 at t = -d      (q = 1, gamma != 0, mu in {0,1})
///   3: beta + nu*delta_{q^t,1}                        (q != 1, q^d = 1)
struct WittFamilyParams {
    int variant = 1;
    long d = 0;
    Scalar beta, nu, gamma;
    int mu = 1;
};

/// Classified averaging operators on W(2,2). With delta = delta_{q^{2t},1} in the
/// root-of-unity case and delta_{t,0} in the degree-zero case, the profile is
///   1: f1 = nu1 delta,          g1 = nu3 delta + gamma,                f2 = nu2 delta,        g2 = nu4 delta
///   2: f1 = nu1 delta + beta,   g1 = nu3 delta + gamma,                f2 = nu2 delta,        g2 = nu4 delta
///   3: f1 = nu1 delta + beta,   g1 = nu3 delta,                        f2 = nu2 delta,        g2 = nu4 delta + beta
///   4: f1 = nu1 delta + gamma,  g1 = nu3 delta,                        f2 = nu2 delta,        g2 = nu4 delta + beta
///   5: f1 = nu1 delta + gamma,  g1 = nu3 delta + (gamma theta - gamma^2)/beta,
///                                                                       f2 = nu2 delta + beta, g2 = nu4 delta + theta - gamma
struct W22FamilyParams {
    enum class Case { root_of_unity, degree_zero };
    int variant = 1;
    Case kase = Case::root_of_unity;
    long d = 0;
    Scalar nu1, nu2, nu3, nu4, gamma, theta, beta;
};

/// A family operator together with the algebra it lives on and the result of
/// the averaging check run at construction. Failing parameter sets are kept
/// and flagged rather than rejected.
struct FamilyOperator {
    std::variant<WittFamilyParams, W22FamilyParams> params;
    HomAlgebra algebra;
    HomogeneousOperator op;
    Report verification;
    bool flagged = false;
    /// Ledger entry explaining a failed verification; empty when not flagged or unexplained.
    std::string expected_failure;
    std::string id;
    std::map<std::string, std::string> parameter_strings;

    bool is_witt() const { return std::holds_alternative<WittFamilyParams>(params); }
};

/// A verify_window <= 0 skips the construction-time check; the operator is then never flagged.
FamilyOperator make_witt_family(const WittFamilyParams& params, const ScalarField& field, long verify_window = 6);
FamilyOperator make_w22_family(const W22FamilyParams& params, const ScalarField& field, long verify_window = 4);

/// The induced product in its printed closed form, for basis symbols.
Element printed_induced_product(const FamilyOperator& fam, const BasisIndex& a, const BasisIndex& b);

/// Compares the definitional induced product {x,y} = [P(x),y] against the
/// printed closed forms and runs check_hom_leibniz on the definitional product.
/// Every mismatch must be explained by a ledger entry; the report fails on an
/// unexplained mismatch or a Hom-Leibniz failure.
Report induced_closed_form_crosscheck(const FamilyOperator& fam, long M);

/// Parameter-level multiplicativity condition stated for the induced product.
bool stated_induced_multiplicative(const FamilyOperator& fam);

/// Runs check_multiplicative on the induced product and compares with the
/// stated condition. Passes when they agree, where an identically zero
/// product counts as multiplicative.
Report induced_multiplicativity_verdict(const FamilyOperator& fam, long M);

/// Ledger identifiers used in reports.
namespace ledger {
inline constexpr const char* witt_v1_constant_shift = "WITT-V1-CONSTANT-SHIFT";
inline constexpr const char* witt_constant_delta_mix = "WITT-CONSTANT-DELTA-MIX";
inline constexpr const char* witt_v2_vacuous = "WITT-V2-VACUOUS";
inline constexpr const char* w22_constant_part = "W22-CONSTANT-PART";
inline constexpr const char* w22_constant_delta_mix = "W22-CONSTANT-DELTA-MIX";
inline constexpr const char* witt_induced_relabel = "WITT-IND-RELABEL";
inline constexpr const char* w22_induced_relabel = "W22-IND-RELABEL";
inline constexpr const char* w22_induced_ww_family = "W22-IND-WW-FAMILY";
} // namespace ledger

} // namespace homavg

#endif

// Copyright 2026 The homavg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef HOMAVG_CLASSIFY_HPP
#define HOMAVG_CLASSIFY_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homavg/algebra.hpp"
#include "homavg/operator.hpp"
#include "homavg/report.hpp"

namespace homavg {

/// Exhaustive search for averaging profiles with values in a finite set S.
///
/// The table domain is every output degree check_averaging reads for the
/// window (one table for Witt, f1, f2, g1, g2 for W(2,2)). A constraint
/// instance is one coefficient of the averaging identities (commute, left,
/// right) for basis symbols in the window. Solutions are the window profiles,
/// the entries at t = m + d with |m| <= M, that extend to a full assignment.
struct SearchSpace {
    /// "witt" or "w22".
    std::string algebra;
    ScalarField field;
    long d = 0;
    long M = 1;
    /// Must contain 0 and no repeated values.
    std::vector<Scalar> values;
    /// Raw assignment count above which the search is refused. When unset,
    /// HOMAVG_CLASSIFY_CEILING or a default of 10^20 applies.
    std::optional<double> ceiling;

    HomAlgebra make_algebra() const;
    int components() const { return algebra == "w22" ? 2 : 1; }
};

/// One table entry: slot 0..3 is f1, f2, g1, g2 (Profile field order).
struct Unknown {
    int slot = 0;
    long t = 0;
    std::string name() const;
};

struct ProfileSet {
    SearchSpace space;
    /// Unknowns in assignment order: the window entries, then the outer ones,
    /// each by increasing |t - d|, then t - d, then slot.
    std::vector<Unknown> unknowns;
    std::size_t window_unknowns = 0;
    /// Window profiles as index vectors into space.values, in lexicographic order.
    std::vector<std::vector<int>> solutions;
    /// The first full assignment found for each solution.
    std::vector<std::vector<int>> extensions;
    std::string raw_size;
    long constraints = 0;
    long nodes = 0;
    /// Solutions whose extension failed check_averaging as a table operator; expected empty.
    std::vector<std::size_t> reverify_failures;
    double millis = 0.0;

    HomogeneousOperator table(std::size_t i) const;
    /// The all-zero index vector is a solution.
    bool has_zero() const;
};

ProfileSet enumerate_profiles(const SearchSpace& space);

/// Unpruned oracle: every full assignment decided by check_averaging, projected to the window.
std::vector<std::vector<int>> brute_force_profiles(const SearchSpace& space);

struct FamilyInstance {
    std::string family;
    std::map<std::string, std::string> params;
    std::vector<int> values;
    /// Ledger ID when the instance fails its own averaging check at the space window.
    std::string explanation;
};

struct CoverageReport {
    std::vector<FamilyInstance> instances;
    /// Solution index and the instances that restrict to it.
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> matched;
    std::vector<std::size_t> unmatched_solutions;
    std::vector<std::size_t> unmatched_instances;
    /// Instantiations skipped because some window value falls outside S.
    long out_of_range = 0;
    std::string restriction;
};

/// Instantiates the classified families with parameters from S and matches them
/// against the solutions of the same space.
CoverageReport match_families(const ProfileSet& profiles);

} // namespace homavg

#endif

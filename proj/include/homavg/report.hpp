// Copyright 2026 The homavg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef HOMAVG_REPORT_HPP
#define HOMAVG_REPORT_HPP

#include <chrono>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "homavg/element.hpp"

namespace homavg {

/// One failing instance of a check.
struct Witness {
    std::vector<BasisIndex> indices;
    Element lhs;
    Element rhs;
    /// Which sub-identity failed, e.g. "commute", "left", "right".
    std::string part;
};

/// Verdict of a window-quantified check.
///
/// Witnesses are kept in graded-lexicographic order of their indices: first by
/// the largest |degree| involved, then lexicographically. The first witness is
/// therefore the same for every window that contains it.
struct Report {
    std::string check;
    std::string algebra;
    std::string field;
    long window = 0;
    bool pass = true;
    long instances = 0;
    long violations = 0;
    /// Violations per Witness::part, counted before witnesses are capped.
    std::map<std::string, long> part_violations;
    std::vector<Witness> witnesses;
    double millis = 0.0;
    std::vector<std::string> notes;
    std::map<std::string, bool> sub_verdicts;
    std::map<std::string, std::string> facts;
    std::vector<Report> children;

    static constexpr std::size_t max_witnesses = 32;

    bool part_ok(const std::string& part) const { return !part_violations.count(part); }

    /// Count one instance; record a witness when lhs != rhs. Returns lhs == rhs.
    bool expect_equal(std::vector<BasisIndex> idx, const Element& lhs, const Element& rhs, std::string part = {});
    void add_violation(Witness w);

    /// Sort and cap witnesses. Sets pass = (violations == 0) unless keep_verdict.
    void finalize(bool keep_verdict = false);
};

/// Graded-lexicographic comparison of index tuples.
bool witness_less(const Witness& a, const Witness& b);

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double millis() const
    {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

} // namespace homavg

#endif

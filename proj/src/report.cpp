// Copyright 2026 The homavg Authors
// SPDX-License-Identifier: Apache-2.0

#include "homavg/report.hpp"

#include <algorithm>
#include <cstdlib>
#include <tuple>
#include <utility>

namespace homavg {

namespace {

long height(const std::vector<BasisIndex>& idx)
{
    long h = 0;
    for (const auto& b : idx) {
        h = std::max(h, std::labs(b.degree));
    }
    return h;
}

} // namespace

bool witness_less(const Witness& a, const Witness& b)
{
    const long ha = height(a.indices), hb = height(b.indices);
    if (ha != hb) {
        return ha < hb;
    }
    return std::tie(a.indices, a.part) < std::tie(b.indices, b.part);
}

bool Report::expect_equal(std::vector<BasisIndex> idx, const Element& lhs, const Element& rhs, std::string part)
{
    ++instances;
    if (lhs == rhs) {
        return true;
    }
    add_violation({std::move(idx), lhs, rhs, std::move(part)});
    return false;
}

void Report::add_violation(Witness w)
{
    ++violations;
    ++part_violations[w.part];
    witnesses.push_back(std::move(w));
    // Trim occasionally so a badly failing check does not hoard memory.
    if (witnesses.size() > 8 * max_witnesses) {
        std::sort(witnesses.begin(), witnesses.end(), witness_less);
        witnesses.resize(max_witnesses);
    }
}

void Report::finalize(bool keep_verdict)
{
    std::sort(witnesses.begin(), witnesses.end(), witness_less);
    if (witnesses.size() > max_witnesses) {
        witnesses.resize(max_witnesses);
    }
    if (!keep_verdict) {
        pass = violations == 0;
    }
}

} // namespace homavg

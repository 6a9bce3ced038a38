// Copyright 2026 The homavg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef HOMAVG_ERROR_HPP
#define HOMAVG_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace homavg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A parameter violates a documented precondition (q = 0, N <= 0, mixed fields, ...).
class InvalidParameter : public Error {
public:
    using Error::Error;
};

/// Exact arithmetic failure, e.g. division by zero.
class ArithmeticError : public Error {
public:
    using Error::Error;
};

/// A basis symbol does not belong to the algebra it was used with.
class InvalidBasis : public Error {
public:
    using Error::Error;
};

/// A table-backed operator was evaluated outside its explicit domain.
class DomainError : public Error {
public:
    DomainError(std::string what, std::vector<long> missing)
        : Error(std::move(what)), missing_(std::move(missing))
    {
    }

    const std::vector<long>& missing_degrees() const noexcept { return missing_; }

private:
    std::vector<long> missing_;
};

/// The per-degree matrix of an operator is not invertible.
class SingularAtDegree : public Error {
public:
    explicit SingularAtDegree(long degree)
        : Error("operator matrix is singular at degree " + std::to_string(degree)), degree_(degree)
    {
    }

    long degree() const noexcept { return degree_; }

private:
    long degree_;
};

/// The classifier refused a search whose size estimate exceeds the ceiling.
class SearchRefused : public Error {
public:
    SearchRefused(std::string what, std::string estimate)
        : Error(std::move(what)), estimate_(std::move(estimate))
    {
    }

    /// Decimal string of the raw assignment count that was refused.
    const std::string& estimate() const noexcept { return estimate_; }

private:
    std::string estimate_;
};

} // namespace homavg

#endif

#pragma once

#include <stdexcept>
#include <string>

namespace fslab {

/// Invalid class parameters, measures, or arguments.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Series division by a series whose constant term is (numerically) zero.
class NearSingular : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An extremal configuration was requested outside the mu-interval where it exists.
class CaseRangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// A sampled class member exceeded a closed-form bound by more than the
/// relative violation tolerance.
class ViolationError : public std::runtime_error {
public:
    ViolationError(const std::string& what, double bound, double best_value)
        : std::runtime_error(what), bound_(bound), best_value_(best_value) {}

    double bound() const noexcept { return bound_; }
    double best_value() const noexcept { return best_value_; }

private:
    double bound_;
    double best_value_;
};

} // namespace fslab

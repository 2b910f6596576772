#pragma once

#include <stdexcept>
#include <string>

namespace vndf {

/// Incident direction is the lower pole (z = -1): the visible hemisphere
/// has zero projected area and no VNDF exists.
class DegenerateIncidence : public std::domain_error {
public:
    explicit DegenerateIncidence(const std::string& what) : std::domain_error(what) {}
};

/// Two directions sum to (numerically) zero, so no half-vector exists.
class AntipodalInput : public std::domain_error {
public:
    explicit AntipodalInput(const std::string& what) : std::domain_error(what) {}
};

/// A denominator fell below its guard threshold.
class DivisionGuard : public std::domain_error {
public:
    explicit DivisionGuard(const std::string& what) : std::domain_error(what) {}
};

/// Quadrature of a density did not sum to one.
class NormalizationFailure : public std::runtime_error {
public:
    explicit NormalizationFailure(const std::string& what) : std::runtime_error(what) {}
};

/// Too few samples or usable bins for a goodness-of-fit test.
class InsufficientData : public std::runtime_error {
public:
    explicit InsufficientData(const std::string& what) : std::runtime_error(what) {}
};

/// A timed region was too short to be resolved by the clock.
class TimerResolution : public std::runtime_error {
public:
    explicit TimerResolution(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace vndf

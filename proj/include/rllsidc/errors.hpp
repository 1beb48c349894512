#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rllsidc {

// Malformed or non-decodable input data (bad symbols, wrong lengths,
// words outside the code).
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A received word that no single insertion/deletion explains.
class UncorrectableError : public DataError {
public:
    using DataError::DataError;
};

// A numeric argument outside its documented domain.
class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// An internal guarantee failed. Seeing one of these is a bug.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// An exhaustive routine was asked for a space beyond its hard cap.
class GuardError : public std::length_error {
public:
    using std::length_error::length_error;
};

enum class Constraint {
    message_length_too_small,
    message_length_too_large,
    run_length_below_rhat,
    d_out_of_range,
    excluded_triple,
    b_out_of_range,
    rhat_too_small,
    front_run_length_too_small,
    front_length_too_small,
    front_length_exceeds_bound,
    front_length_not_injective,
};

std::string_view to_string(Constraint c) noexcept;

// Parameter bundle rejected; `constraint()` names the violated rule.
class ValidationError : public std::invalid_argument {
public:
    ValidationError(Constraint c, const std::string& detail)
        : std::invalid_argument(std::string(to_string(c)) + ": " + detail), constraint_(c) {}

    Constraint constraint() const noexcept { return constraint_; }

private:
    Constraint constraint_;
};

}  // namespace rllsidc

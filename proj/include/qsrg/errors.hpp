#pragma once

#include <stdexcept>
#include <string>

namespace qsrg {

enum class Errc {
    invalid_input,
    invalid_element,
    division_by_zero,
    overflow,
    ambient_mismatch,
    budget_exceeded,
    not_a_point,
    invalid_index,
    invalid_edge,
    duplicate_edge,
    not_divisible,
    odd_dimension,
    not_strongly_regular,
    wrong_parameter_shape,
    not_polarity,
    not_symplectic,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

} // namespace qsrg

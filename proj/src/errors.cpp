#include "qsrg/errors.hpp"

namespace qsrg {

const char* errc_name(Errc code) {
    switch (code) {
    case Errc::invalid_input: return "InvalidInput";
    case Errc::invalid_element: return "InvalidElement";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::overflow: return "Overflow";
    case Errc::ambient_mismatch: return "AmbientMismatch";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::not_a_point: return "NotAPoint";
    case Errc::invalid_index: return "InvalidIndex";
    case Errc::invalid_edge: return "InvalidEdge";
    case Errc::duplicate_edge: return "DuplicateEdge";
    case Errc::not_divisible: return "NotDivisible";
    case Errc::odd_dimension: return "OddDimension";
    case Errc::not_strongly_regular: return "NotStronglyRegular";
    case Errc::wrong_parameter_shape: return "WrongParameterShape";
    case Errc::not_polarity: return "NotPolarity";
    case Errc::not_symplectic: return "NotSymplectic";
    }
    return "UnknownError";
}

} // namespace qsrg

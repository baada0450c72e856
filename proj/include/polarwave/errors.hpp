#ifndef POLARWAVE_ERRORS_HPP
#define POLARWAVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polarwave {

enum class ErrorKind {
    OutOfRange,
    DegenerateCoupling,
    CurvatureTooSmall,
    NonFinite,
    NoConvergence,
    DegenerateLeadingCoefficient,
    NonPositiveK,
    GridTooCoarse,
    UnknownKey,
    ParseError,
    IoError,
    InvalidArgument,
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::OutOfRange: return "out_of_range";
        case ErrorKind::DegenerateCoupling: return "degenerate_coupling";
        case ErrorKind::CurvatureTooSmall: return "curvature_too_small";
        case ErrorKind::NonFinite: return "non_finite";
        case ErrorKind::NoConvergence: return "no_convergence";
        case ErrorKind::DegenerateLeadingCoefficient: return "degenerate_leading_coefficient";
        case ErrorKind::NonPositiveK: return "non_positive_k";
        case ErrorKind::GridTooCoarse: return "grid_too_coarse";
        case ErrorKind::UnknownKey: return "unknown_key";
        case ErrorKind::ParseError: return "parse_error";
        case ErrorKind::IoError: return "io_error";
        case ErrorKind::InvalidArgument: return "invalid_argument";
    }
    return "unknown";
}

/**
 * Single exception type for the whole library.  what() is a one-line,
 * machine-parsable "<kind>: <detail>" string.
 */
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + detail),
          kind_(kind),
          detail_(detail) {}

    ErrorKind kind() const { return kind_; }
    const std::string& detail() const { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

} // namespace polarwave

#endif

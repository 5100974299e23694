#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hbill {

/// Failure categories shared by every module. The CLI maps them to exit codes.
enum class ErrorCode {
    InvalidModel,        ///< radii mismatch, r0 outside the model range
    Domain,              ///< argument outside the operation's domain
    GeometryViolation,   ///< point inside an obstacle where it must not be
    Tangency,            ///< grazing contact where a transversal one is required
    DegenerateCrossing,  ///< integer line touched without a transversal crossing
    DegenerateOrbit,     ///< trivial period-2 bouncing or motion along an integer line
    Construction,        ///< compiler produced an itinerary failing its own checks
    Insertion,           ///< no admissible idle insertion at the requested place
    NotAdmissible,       ///< itinerary rejected by the admissibility gate
    Convergence,         ///< iteration cap reached
    InvalidMinimizer,    ///< interior corner with a bend
    Obstructed,          ///< chord penetrates an obstacle
    OutOfGuarantee,      ///< request beyond the constructive guarantee
    Parse,               ///< malformed text input
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace hbill

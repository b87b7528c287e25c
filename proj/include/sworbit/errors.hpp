#pragma once

#include <stdexcept>
#include <string>

namespace sworbit {

// Failure codes for operations with checkable preconditions.  Legality
// problems in a presentation are reported through validate() instead of
// being thrown.
enum class errc {
    dimension_mismatch,
    parent_mismatch,
    group_mismatch,
    inconsistent_betti,
    not_multiply_weighted,
    too_few_fixed_points,
    wrong_fixed_point_count,
    index_unassignable,
    precondition_violated,
    parity_violation,
    not_enough_topology,
    multiply_weighted_circle_present,
    boundary_present,
    enclosed_index_nonzero,
    b1_not_positive,
    signature_out_of_range,
    spin_parity_violation,
    invalid_input,
};

inline const char* errc_name(errc code) {
    switch (code) {
        case errc::dimension_mismatch: return "DimensionMismatch";
        case errc::parent_mismatch: return "ParentMismatch";
        case errc::group_mismatch: return "GroupMismatch";
        case errc::inconsistent_betti: return "InconsistentBetti";
        case errc::not_multiply_weighted: return "NotMultiplyWeighted";
        case errc::too_few_fixed_points: return "TooFewFixedPoints";
        case errc::wrong_fixed_point_count: return "WrongFixedPointCount";
        case errc::index_unassignable: return "IndexUnassignable";
        case errc::precondition_violated: return "PreconditionViolated";
        case errc::parity_violation: return "ParityViolation";
        case errc::not_enough_topology: return "NotEnoughTopology";
        case errc::multiply_weighted_circle_present: return "MultiplyWeightedCirclePresent";
        case errc::boundary_present: return "BoundaryPresent";
        case errc::enclosed_index_nonzero: return "EnclosedIndexNonzero";
        case errc::b1_not_positive: return "B1NotPositive";
        case errc::signature_out_of_range: return "SignatureOutOfRange";
        case errc::spin_parity_violation: return "SpinParityViolation";
        case errc::invalid_input: return "InvalidInput";
    }
    return "UnknownError";
}

class engine_error : public std::runtime_error {
public:
    engine_error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& message) {
    throw engine_error(code, message);
}

}  // namespace sworbit

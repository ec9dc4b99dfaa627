#pragma once

#include <stdexcept>
#include <string>

namespace ropesweep {

enum class ErrorCode {
    WrongSwapCount,
    RepeatedCrossing,
    PositionOutOfRange,
    BottomChainNotOnRope,
    NotInnerFace,
    PreconditionNotMet,
    TerminalVertex,
    MultipleCrossings,
    NoCrossing,
    NotADownSet,
    ResourceLimit,
    TooLarge,
    NotAcyclic,
    DegenerateInput,
    InvariantViolation,
    ParseError,
    IoError,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }

    // Process exit code convention: 2 input, 3 resource limit, 4 invariant.
    int exit_code() const {
        switch (code_) {
            case ErrorCode::ResourceLimit:
            case ErrorCode::TooLarge:
                return 3;
            case ErrorCode::InvariantViolation:
                return 4;
            default:
                return 2;
        }
    }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

}  // namespace ropesweep

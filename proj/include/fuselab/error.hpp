#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fuselab {

// Every failure the library can raise, one code per distinct condition.
// The CLI maps these onto exit codes: IoError -> 2, Internal -> 3,
// everything else (input/validation problems) -> 1.
enum class ErrorCode {
    // identifiers and panel structure
    InvalidIdentifier,
    DuplicateEntry,
    MissingCell,
    ScoreOutOfRange,
    SingleClassDataset,
    DuplicateSampleId,
    // weights
    AllZeroWeights,
    NegativeWeight,
    LengthMismatch,
    // score/metrics-table parsing
    BadHeader,
    BadRow,
    BadLabel,
    BadScore,
    ValueOutOfRange,
    // panel joining
    SampleSetMismatch,
    LabelConflict,
    EmptyIntersection,
    // manifest
    BadManifest,
    // fusion
    DegenerateSkills,
    NameCollision,
    // metrics
    NonFiniteScore,
    // analysis
    MissingEntry,
    // synth
    InvalidSpec,
    // environment
    IoError,
    Internal,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace fuselab

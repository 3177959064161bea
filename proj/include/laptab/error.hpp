#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace laptab {

enum class ErrorCode {
    InvalidArgument,
    NonFinite,
    NoConvergence,
    KOutOfRange,
    EmptySubset,
    DimensionMismatch,
    LengthMismatch,
    ZeroVector,
    BadOrder,
    DomainTooLarge,
    HomogeneityViolation,
    NonPositiveTheta,
    NonUnitVector,
    NotInJPerp,
    RowSumNotZero,
    WeightedInput,
    Infeasible,
    TooManyEdges,
    NotBipartite,
    NonPositiveLambdaK,
    EigCountMismatch,
    LabelOutOfRange,
    OrderTooLarge,
    BadChar,
    TruncatedBits,
    TrailingGarbage,
    LoopEdge,
    ParseError,
    DuplicateEdge,
    SelfLoop,
    IndexOutOfRange,
    IOError,
    NegativeWeight,
    NotATree,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

} // namespace laptab

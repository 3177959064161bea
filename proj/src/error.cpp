#include "laptab/error.hpp"

namespace laptab {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::KOutOfRange: return "KOutOfRange";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::BadOrder: return "BadOrder";
    case ErrorCode::DomainTooLarge: return "DomainTooLarge";
    case ErrorCode::HomogeneityViolation: return "HomogeneityViolation";
    case ErrorCode::NonPositiveTheta: return "NonPositiveTheta";
    case ErrorCode::NonUnitVector: return "NonUnitVector";
    case ErrorCode::NotInJPerp: return "NotInJPerp";
    case ErrorCode::RowSumNotZero: return "RowSumNotZero";
    case ErrorCode::WeightedInput: return "WeightedInput";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::TooManyEdges: return "TooManyEdges";
    case ErrorCode::NotBipartite: return "NotBipartite";
    case ErrorCode::NonPositiveLambdaK: return "NonPositiveLambdaK";
    case ErrorCode::EigCountMismatch: return "EigCountMismatch";
    case ErrorCode::LabelOutOfRange: return "LabelOutOfRange";
    case ErrorCode::OrderTooLarge: return "OrderTooLarge";
    case ErrorCode::BadChar: return "BadChar";
    case ErrorCode::TruncatedBits: return "TruncatedBits";
    case ErrorCode::TrailingGarbage: return "TrailingGarbage";
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::IOError: return "IOError";
    case ErrorCode::NegativeWeight: return "NegativeWeight";
    case ErrorCode::NotATree: return "NotATree";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
{
}

void fail(ErrorCode code, const std::string& what)
{
    throw Error(code, what);
}

} // namespace laptab

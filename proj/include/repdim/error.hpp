#pragma once

#include <stdexcept>
#include <string>

namespace repdim {

enum class ErrorCode {
    NonPrimeModulus,
    DivisionByZero,
    FieldMismatch,
    UnsupportedOrder,
    DimensionMismatch,
    UnsupportedRank,
    CapExceeded,
    BadComposition,
    RankTooLarge,
    RelationViolation,
    FreenessFailure,
    AlgorithmFailure,
    SplitError,
    SerialityError,
    NotSymmetricWithThisForm,
    CertificationFailure,
    LinearityFailure,
    EvenRankUnsupported,
    ParseError,
    Usage,
    Io,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), m_code(code) {}

    ErrorCode code() const { return m_code; }

private:
    ErrorCode m_code;
};

inline const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::NonPrimeModulus: return "NonPrimeModulus";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::UnsupportedRank: return "UnsupportedRank";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::BadComposition: return "BadComposition";
    case ErrorCode::RankTooLarge: return "RankTooLarge";
    case ErrorCode::RelationViolation: return "RelationViolation";
    case ErrorCode::FreenessFailure: return "FreenessFailure";
    case ErrorCode::AlgorithmFailure: return "AlgorithmFailure";
    case ErrorCode::SplitError: return "SplitError";
    case ErrorCode::SerialityError: return "SerialityError";
    case ErrorCode::NotSymmetricWithThisForm: return "NotSymmetricWithThisForm";
    case ErrorCode::CertificationFailure: return "CertificationFailure";
    case ErrorCode::LinearityFailure: return "LinearityFailure";
    case ErrorCode::EvenRankUnsupported: return "EvenRankUnsupported";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Usage: return "Usage";
    case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

} // namespace repdim

#ifndef MTT_ERROR_HPP
#define MTT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mtt {

enum class ErrorKind {
    // input errors
    DuplicateEdge,
    SelfLoop,
    VertexOutOfRange,
    MalformedInput,
    InfeasibleSizes,
    ParameterOutOfRange,
    DegenerateParameters,
    EmptySide,
    OverlappingSides,
    TooLarge,
    ArithmeticConstraintViolated,
    NotPerfect,
    // internal consistency failures
    CountIdentityViolated,
    InternalInvariant,
};

inline const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::InfeasibleSizes: return "InfeasibleSizes";
    case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorKind::DegenerateParameters: return "DegenerateParameters";
    case ErrorKind::EmptySide: return "EmptySide";
    case ErrorKind::OverlappingSides: return "OverlappingSides";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ArithmeticConstraintViolated: return "ArithmeticConstraintViolated";
    case ErrorKind::NotPerfect: return "NotPerfect";
    case ErrorKind::CountIdentityViolated: return "CountIdentityViolated";
    case ErrorKind::InternalInvariant: return "InternalInvariant";
    }
    return "Unknown";
}

/// True for kinds that indicate a bug rather than bad input.
inline bool is_internal(ErrorKind kind)
{
    return kind == ErrorKind::CountIdentityViolated || kind == ErrorKind::InternalInvariant;
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace mtt

#endif

#ifndef IDCODE_ERROR_HPP
#define IDCODE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace idcode {

enum class Err {
    LoopArc,
    DuplicateArc,
    OutOfRange,
    EllOutOfRange,
    ConfigLimit,
    BadSize,
    BadSpec,
    UnknownName,
    ParseError,
    IoError,
    TooLarge,
    SizeCapTooSmall,
    MissingCatalog
};

inline const char * err_name(Err e)
{
    switch (e) {
        case Err::LoopArc: return "LoopArc";
        case Err::DuplicateArc: return "DuplicateArc";
        case Err::OutOfRange: return "OutOfRange";
        case Err::EllOutOfRange: return "EllOutOfRange";
        case Err::ConfigLimit: return "ConfigLimit";
        case Err::BadSize: return "BadSize";
        case Err::BadSpec: return "BadSpec";
        case Err::UnknownName: return "UnknownName";
        case Err::ParseError: return "ParseError";
        case Err::IoError: return "IoError";
        case Err::TooLarge: return "TooLarge";
        case Err::SizeCapTooSmall: return "SizeCapTooSmall";
        case Err::MissingCatalog: return "MissingCatalog";
    }
    return "?";
}

class Error : public std::runtime_error {
public:
    Error(Err code, const std::string & message) :
        std::runtime_error(std::string(err_name(code)) + ": " + message),
        _code(code)
    {
    }

    Err code() const noexcept { return _code; }

private:
    Err _code;
};

} // namespace idcode

#endif

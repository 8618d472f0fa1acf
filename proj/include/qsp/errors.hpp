#pragma once

#include <stdexcept>
#include <string>

namespace qsp {

// Base of every error raised by the library. The CLI maps UsageError to
// exit code 2 and everything else to an internal failure.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define QSP_DECLARE_ERROR(Name)                                                \
    struct Name : Error {                                                      \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {}   \
    }

QSP_DECLARE_ERROR(DivisionByZero);
QSP_DECLARE_ERROR(NegativeIndex);
QSP_DECLARE_ERROR(UnsupportedCase);
QSP_DECLARE_ERROR(TableMismatch);
QSP_DECLARE_ERROR(MissingBarImage);
QSP_DECLARE_ERROR(OrderMismatch);
QSP_DECLARE_ERROR(PoleInCoefficient);
QSP_DECLARE_ERROR(NonCommutingCross);
QSP_DECLARE_ERROR(ShapeError);
QSP_DECLARE_ERROR(FiltrationViolation);
QSP_DECLARE_ERROR(ParseError);
QSP_DECLARE_ERROR(UsageError);

#undef QSP_DECLARE_ERROR

}  // namespace qsp

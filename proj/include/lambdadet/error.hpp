#ifndef LAMBDADET_ERROR_HPP
#define LAMBDADET_ERROR_HPP

#include <stdexcept>
#include <string>

namespace lambdadet {

/// Base of every domain error raised by the library. `kind()` is the stable
/// error name printed by the CLI ("InexactDivision", "PoleAtZero", ...).
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define LAMBDADET_DEFINE_ERROR(Name)                                        \
    class Name : public Error {                                             \
    public:                                                                 \
        explicit Name(const std::string& message) : Error(#Name, message) {} \
    }

// exact arithmetic
LAMBDADET_DEFINE_ERROR(DivisionByZero);
LAMBDADET_DEFINE_ERROR(InexactDivision);
LAMBDADET_DEFINE_ERROR(PoleAtZero);
LAMBDADET_DEFINE_ERROR(InvalidExponent);
LAMBDADET_DEFINE_ERROR(ParseError);

// alternating-sign matrices
LAMBDADET_DEFINE_ERROR(InvalidMatrix);
LAMBDADET_DEFINE_ERROR(CapExceeded);
LAMBDADET_DEFINE_ERROR(SizeMismatch);
LAMBDADET_DEFINE_ERROR(NonMonomialEntry);

// condensation
LAMBDADET_DEFINE_ERROR(ZeroMinor);
LAMBDADET_DEFINE_ERROR(IndeterminateForm);
LAMBDADET_DEFINE_ERROR(CondensationBreakdown);
LAMBDADET_DEFINE_ERROR(NonConstantEntry);

// tilings and matchings
LAMBDADET_DEFINE_ERROR(WidthExceeded);
LAMBDADET_DEFINE_ERROR(CellNotInRegion);
LAMBDADET_DEFINE_ERROR(OrderExceeded);
LAMBDADET_DEFINE_ERROR(InvalidGraph);

#undef LAMBDADET_DEFINE_ERROR

} // namespace lambdadet

#endif // LAMBDADET_ERROR_HPP

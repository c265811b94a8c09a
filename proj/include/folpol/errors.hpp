#pragma once
#include <stdexcept>
#include <string>

namespace folpol {

// Base class for every failure the engine reports as a mathematical error.
class MathError : public std::runtime_error {
public:
    explicit MathError(const std::string& kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(kind) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

#define FOLPOL_ERROR(Name)                                                   \
    class Name : public MathError {                                          \
    public:                                                                  \
        explicit Name(const std::string& w = "") : MathError(#Name, w) {}    \
    };

FOLPOL_ERROR(NeedsAlgebraicExtension)
FOLPOL_ERROR(NotSquareFree)
FOLPOL_ERROR(TruncationInsufficient)
FOLPOL_ERROR(NotInvariant)
FOLPOL_ERROR(NotASeparatrix)
FOLPOL_ERROR(CeilingExceeded)
FOLPOL_ERROR(NonGenericSamples)
FOLPOL_ERROR(LineNotGeneric)
FOLPOL_ERROR(ExcludedParameter)
FOLPOL_ERROR(InfiniteIntersection)
FOLPOL_ERROR(InvalidInput)

#undef FOLPOL_ERROR

}  // namespace folpol

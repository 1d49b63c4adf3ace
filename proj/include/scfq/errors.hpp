#pragma once

#include <stdexcept>
#include <string>

namespace scfq {

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero in finite field") {}
};

// A configured enumeration bound (group order, subspace lattice size, ...)
// would be exceeded.  CLI maps this to exit code 3.
struct BoundExceeded : std::runtime_error {
    explicit BoundExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Exact interpolation produced non-integer coefficients or failed the
// held-out check.  CLI maps this to exit code 4.
struct FitFailure : std::runtime_error {
    explicit FitFailure(const std::string& what) : std::runtime_error(what) {}
};

struct NumericalFailure : std::runtime_error {
    explicit NumericalFailure(const std::string& what) : std::runtime_error(what) {}
};

struct SingularMatrix : std::runtime_error {
    explicit SingularMatrix(const std::string& what) : std::runtime_error(what) {}
};

struct NotInvariant : std::runtime_error {
    explicit NotInvariant(const std::string& what) : std::runtime_error(what) {}
};

struct NotSingleBlock : std::runtime_error {
    explicit NotSingleBlock(const std::string& what) : std::runtime_error(what) {}
};

struct UnidentifiedIrrep : std::runtime_error {
    explicit UnidentifiedIrrep(const std::string& what) : std::runtime_error(what) {}
};

struct TooSmallN : std::invalid_argument {
    explicit TooSmallN(const std::string& what) : std::invalid_argument(what) {}
};

struct ParseError : std::invalid_argument {
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace scfq

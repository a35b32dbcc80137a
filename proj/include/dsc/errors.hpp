#pragma once

#include <stdexcept>
#include <string>

namespace dsc {

// Raised when a rational with v_p < 0 reaches a p-adic reduction.  This is
// never a data condition in a correct run: it signals a misapplied
// congruence or an implementation bug, and must not be swallowed.
struct NegativeValuationError : std::domain_error {
    explicit NegativeValuationError(const std::string& what) : std::domain_error(what) {}
};

struct NotInvertibleError : std::domain_error {
    explicit NotInvertibleError(const std::string& what) : std::domain_error(what) {}
};

struct NonUnitSeriesError : std::domain_error {
    explicit NonUnitSeriesError(const std::string& what) : std::domain_error(what) {}
};

struct RangeError : std::out_of_range {
    explicit RangeError(const std::string& what) : std::out_of_range(what) {}
};

struct UnknownCheckError : std::invalid_argument {
    explicit UnknownCheckError(const std::string& what) : std::invalid_argument(what) {}
};

struct CheckDomainError : std::domain_error {
    explicit CheckDomainError(const std::string& what) : std::domain_error(what) {}
};

struct InvalidSpecError : std::invalid_argument {
    explicit InvalidSpecError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace dsc

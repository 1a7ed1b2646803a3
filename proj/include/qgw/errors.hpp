#pragma once

#include <stdexcept>
#include <string>

namespace qgw {

/* Series kernel preconditions. */
struct ZeroConstantTerm : std::domain_error {
    explicit ZeroConstantTerm(const std::string& what) : std::domain_error(what) {}
};

struct NotUnitOne : std::domain_error {
    explicit NotUnitOne(const std::string& what) : std::domain_error(what) {}
};

struct NonzeroConstant : std::domain_error {
    explicit NonzeroConstant(const std::string& what) : std::domain_error(what) {}
};

struct NotReversible : std::domain_error {
    explicit NotReversible(const std::string& what) : std::domain_error(what) {}
};

/* Ring / expansion bookkeeping. */
struct DimensionMismatch : std::invalid_argument {
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct WindowExhausted : std::domain_error {
    explicit WindowExhausted(const std::string& what) : std::domain_error(what) {}
};

struct OutOfWindow : std::out_of_range {
    explicit OutOfWindow(const std::string& what) : std::out_of_range(what) {}
};

/* Geometry input validation. */
struct InvalidSpec : std::invalid_argument {
    explicit InvalidSpec(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace qgw

#ifndef MOMENTKIT_ERROR_HPP
#define MOMENTKIT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace momentkit {

/// Classification of domain failures. The CLI maps every kind to exit code 3.
enum class ErrorKind {
    invalid_argument,
    zero_vector,
    not_divisible,
    empty,
    unbounded,
    degenerate,
    not_delzant,
    not_polarizing,
    non_simple_vertex,
    not_generic,
    weight_vanishes,
    not_gkm,
    box_too_small,
    free_module_check_failed,
};

std::string_view to_string(ErrorKind kind);

/// Raised when an input violates the mathematical preconditions of an
/// operation (an empty polytope, a non-Delzant vertex, a zero divisor...).
class DomainError : public std::domain_error {
public:
    DomainError(ErrorKind kind, const std::string& what)
        : std::domain_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace momentkit

#endif

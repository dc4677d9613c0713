#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hsg {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

/// Three-valued outcome of a numerical test of an asymptotic property.
enum class Verdict { yes, no, undetermined };

std::string_view to_string(Verdict v);

/// Input outside the domain of an operation (boundary points, bad parameters).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A numerical procedure failed to reach its tolerance.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Throws DomainError unless Im z > 0.
void require_upper_half_plane(Complex z, std::string_view what);

} // namespace hsg

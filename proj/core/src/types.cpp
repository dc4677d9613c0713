#include "hsg/types.hpp"

#include <cmath>

namespace hsg {

std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::undetermined: return "undetermined";
    }
    return "undetermined";
}

void require_upper_half_plane(Complex z, std::string_view what) {
    if (!(z.imag() > 0.0) || !std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw DomainError(std::string(what) + ": point (" + std::to_string(z.real()) + ", " +
                          std::to_string(z.imag()) + ") is not in the upper half-plane");
    }
}

} // namespace hsg

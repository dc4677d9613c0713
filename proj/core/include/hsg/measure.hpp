#pragma once

#include <string_view>
#include <vector>

#include "hsg/quadrature.hpp"

namespace hsg {

/// Absolutely continuous families available for the measure mu.
enum class AcFamily {
    cauchy,    ///< params: center, scale > 0; infinite second moment
    gaussian,  ///< params: mean, sigma > 0
    uniform    ///< params: a < b
};

std::string_view to_string(AcFamily f);
AcFamily ac_family_from_string(std::string_view name);

struct Atom {
    double location = 0.0;
    double weight = 0.0;
};

/// Probability density of `family` scaled by `weight`.
struct AcPart {
    AcFamily family = AcFamily::gaussian;
    double p1 = 0.0;
    double p2 = 1.0;
    double weight = 0.0;

    bool finite_second_moment() const { return family != AcFamily::cauchy; }
};

/// Positive finite measure on the real line: finitely many atoms plus a finite
/// mixture of named densities. Immutable once constructed.
class Measure {
public:
    Measure() = default;
    Measure(std::vector<Atom> atoms, std::vector<AcPart> ac_parts);

    static Measure atom(double location, double weight);
    static Measure cauchy(double center, double scale, double weight = 1.0);
    static Measure gaussian(double mean, double sigma, double weight = 1.0);
    static Measure uniform(double a, double b, double weight = 1.0);

    /// Sum of two measures.
    Measure operator+(const Measure& other) const;

    const std::vector<Atom>& atoms() const { return atoms_; }
    const std::vector<AcPart>& ac_parts() const { return ac_parts_; }

    bool is_null() const { return atoms_.empty() && ac_parts_.empty(); }
    bool finite_second_moment() const;

private:
    std::vector<Atom> atoms_;
    std::vector<AcPart> ac_parts_;
};

double mass(const Measure& mu);

struct MomentValue {
    double value = 0.0;
    bool infinite = false;
};

/// k-th moment, k in {1, 2}. The first moment of a Cauchy part is the
/// symmetric principal value about its center.
MomentValue moment(const Measure& mu, int k);

/// Integral of f against mu: exact sum over atoms plus adaptive quadrature
/// against each density. Infinite supports are mapped to a bounded angle by
/// s = center + scale * tan(theta).
QuadratureResult integrate(const Measure& mu, const RealToComplex& f,
                           const QuadratureOptions& opts = {});

} // namespace hsg

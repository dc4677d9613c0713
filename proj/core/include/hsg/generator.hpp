#pragma once

#include <optional>

#include "hsg/limit.hpp"
#include "hsg/measure.hpp"

namespace hsg {

/// Herglotz data (alpha, beta, mu) of an infinitesimal generator
///   G(z) = alpha z + beta + int (1 + s z) / (s - z) dmu(s).
struct HerglotzTriplet {
    double alpha = 0.0;
    double beta = 0.0;
    Measure mu;

    HerglotzTriplet() = default;
    HerglotzTriplet(double alpha, double beta, Measure mu);

    /// G == 0, the identity semigroup.
    bool is_trivial() const { return alpha == 0.0 && beta == 0.0 && mu.is_null(); }
    bool is_parabolic() const { return alpha == 0.0; }
    /// G == beta, a real constant.
    bool is_real_constant() const { return alpha == 0.0 && mu.is_null(); }
};

/// Evaluator for G bound to one triplet.
///
/// Cauchy parts of mu are integrated in closed form: the Poisson integral of
/// (1 + s z)/(s - z) against a Cauchy(c, gamma) density is the kernel at
/// s = c - i gamma. On the remaining measure, which has a finite second moment,
/// the kernel is split as -s + (1 + s^2)/(s - z) so that the constant part
/// beta - int s dmu is exact and the integrand decays like 1/z; large-|z|
/// evaluations then keep full relative accuracy.
class Generator {
public:
    explicit Generator(HerglotzTriplet triplet, QuadratureOptions opts = {});

    /// Throws DomainError for Im z <= 0 and NumericalError if quadrature fails.
    Complex operator()(Complex z) const;
    QuadratureResult evaluate(Complex z) const;

    const HerglotzTriplet& triplet() const { return triplet_; }

private:
    HerglotzTriplet triplet_;
    QuadratureOptions opts_;
    Measure finite_part_;             // mu without its Cauchy parts
    std::vector<AcPart> cauchy_parts_;
    double drift_ = 0.0;              // beta - int s d(finite_part_)
};

Complex eval_G(const HerglotzTriplet& triplet, Complex z, const QuadratureOptions& opts = {});

struct CoefficientEstimate {
    LimitEstimate alpha_limit;
    double alpha_est = 0.0;
    double beta_est = 0.0;
    bool alpha_matches = false;
    bool beta_matches = false;
};

/// Recovers alpha = lim G(iy)/(iy) and beta = Re G(i) from evaluations of G and
/// compares them with the stored fields.
CoefficientEstimate coefficients_check(const HerglotzTriplet& triplet, const RayGrid& grid = {},
                                       double rel_tol = 1e-6);

enum class Kind { hyperbolic, parabolic, trivial };
enum class Step { positive, zero, undetermined };
enum class Shift { finite, infinite, undetermined };

std::string_view to_string(Kind k);
std::string_view to_string(Step s);
std::string_view to_string(Shift s);

struct ExtremalVerdicts {
    Verdict moments = Verdict::undetermined;
    Verdict zg_limit = Verdict::undetermined;
    Verdict sqrt_koenigs = Verdict::undetermined;

    /// True when all determined verdicts coincide.
    bool consistent() const;
};

struct ClassificationReport {
    Kind kind = Kind::parabolic;
    double spectral_value = 0.0;
    Step step = Step::undetermined;
    Shift shift = Shift::undetermined;
    ExtremalVerdicts extremal;
    std::optional<Complex> predicted_rate_constant;
};

/// Classification that follows from (alpha, beta, mu) alone.
ClassificationReport classify_algebraic(const HerglotzTriplet& triplet);

struct ExtremalTest {
    Verdict verdict = Verdict::undetermined;
    MomentValue second_moment;
    double first_moment = 0.0;
    double drift = 0.0;  // beta - int s dmu
    std::optional<Complex> predicted_limit;
};

/// Moment criterion for extremal rate: int s^2 dmu < inf and beta = int s dmu.
/// When it holds, lim phi_t / sqrt(t) = i sqrt(2 int (1 + s^2) dmu).
ExtremalTest extremal_zero_hs_test(const HerglotzTriplet& triplet, double beta_tol = 1e-9);

struct ZgLimit {
    LimitEstimate limit;
    Verdict verdict = Verdict::undetermined;
    std::optional<double> rate;  // sqrt(-2 * limit) when extremal
};

/// Radial limit of z G(z) along z = iy; extremal iff it is a negative real.
ZgLimit zG_angular_limit(const HerglotzTriplet& triplet, const RayGrid& grid = {},
                         const RayLimitOptions& opts = {}, const QuadratureOptions& quad = {});

} // namespace hsg

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hsg/flow.hpp"
#include "hsg/limit.hpp"

namespace hsg {

enum class Normalization { sqrt_t, linear_t, exp_lambda };
std::string_view to_string(Normalization n);

struct RateNormalization {
    Normalization kind = Normalization::sqrt_t;
    double lambda = 0.0;

    double operator()(double t) const;
};

struct RateOptions {
    int window = 8;
    double rel_tol = 1e-3;
    /// Absolute tolerance on the argument sequence (radians).
    double arg_tol = 1e-3;
    double infinity_threshold = 1e3;
    /// Horizon required in sqrt_t mode.
    double min_horizon_sqrt = 1e6;
};

struct RateEstimate {
    RateNormalization normalization;
    LimitEstimate limit;    ///< lim phi_t / n(t)
    LimitEstimate modulus;  ///< lim |phi_t| / n(t)
    /// Tail maximum of |phi_t| / n(t) (limsup proxy).
    double tail_max = 0.0;
};

RateEstimate rate_estimate(const Orbit& orbit, RateNormalization normalization,
                           const RateOptions& opts = {});

struct SlopeEstimate {
    LimitEstimate limit;  ///< lim arg phi_t (real)
    bool orthogonal = false;
};

SlopeEstimate slope(const Orbit& orbit, const RateOptions& opts = {});

struct CriterionResult {
    std::string name;
    Verdict verdict = Verdict::undetermined;
    std::optional<Complex> constant;
    std::string detail;
};

struct ValidationOptions {
    double constant_rel_tol = 1e-3;
    RayGrid grid{};
    RayLimitOptions ray{};
    RateOptions rate{};
};

struct ValidationReport {
    std::vector<CriterionResult> criteria;
    std::optional<Complex> measured_constant;
    Verdict consensus = Verdict::undetermined;
    bool verdicts_agree = true;
    bool constants_agree = true;
    double constant_rel_tol = 1e-3;
    std::vector<std::string> diagnostics;

    bool ok() const { return verdicts_agree && constants_agree; }
};

/// Runs the moment, zG-limit, sqrt-Koenigs and orbit-rate criteria for a
/// parabolic triplet and checks that they agree.
ValidationReport cross_validate(const HerglotzTriplet& triplet, const Orbit& orbit,
                                const ValidationOptions& opts = {});

} // namespace hsg

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hsg/flow.hpp"
#include "hsg/limit.hpp"

namespace hsg {

enum class ChartKind { parabolic, hyperbolic };
std::string_view to_string(ChartKind k);

/// Normalization of a Koenigs function: parabolic charts are anchored with
/// h(base_point) = 1, hyperbolic ones with h(base_point) = i.
struct KoenigsChart {
    ChartKind kind = ChartKind::parabolic;
    double lambda = 0.0;
    Complex base_point{0.0, 1.0};
    Complex normalization{1.0, 0.0};
};

KoenigsChart make_chart(const HerglotzTriplet& triplet, Complex base_point = kI);

/// Raised when a sampled Koenigs value falls on the branch cut (-inf, 0].
class ChartError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class PathShape {
    straight,   ///< segment from the base point
    over_top    ///< up, across at a common height, then down
};

struct KoenigsOptions {
    QuadratureOptions path{1e-13, 1e-15, 2000};
    QuadratureOptions generator{};
    PathShape shape = PathShape::straight;
    /// Minimum of |G(w)| (1 + |w|) tolerated on the integration path. G may decay
    /// like 1/w at infinity, hence the scaling.
    double zero_guard = 1e-13;
};

/// Integral of dw / G(w) along a polyline in the upper half-plane. Each segment
/// is cut into pieces no longer than the smallest imaginary part on them.
QuadratureResult integrate_inverse_generator(const Generator& g, std::span<const Complex> polyline,
                                             const KoenigsOptions& opts = {});

/// Solution of the Abel equation h o phi_t = h + t, via h' = 1/G.
Complex koenigs_parabolic(const HerglotzTriplet& triplet, const KoenigsChart& chart, Complex z,
                          const KoenigsOptions& opts = {});

/// Solution of the Schroeder equation h o phi_t = e^{lambda t} h, via h'/h = lambda/G.
Complex koenigs_hyperbolic(const HerglotzTriplet& triplet, const KoenigsChart& chart, Complex z,
                           const KoenigsOptions& opts = {});

/// |h(phi_t(z)) - h(z) - t| / (1 + t).
double abel_residual(const HerglotzTriplet& triplet, const KoenigsChart& chart, Complex z, double t,
                     const KoenigsOptions& opts = {}, const FlowOptions& flow = {});

/// |h(phi_t(z)) - e^{lambda t} h(z)| / (1 + |e^{lambda t} h(z)|).
double schroeder_residual(const HerglotzTriplet& triplet, const KoenigsChart& chart, Complex z,
                          double t, const KoenigsOptions& opts = {}, const FlowOptions& flow = {});

/// Estimate of lim f(iy) / (iy). A converged nonzero value means f is conformal
/// at infinity (along the imaginary axis).
LimitEstimate angular_ratio_limit(const std::function<Complex(double)>& f, const RayGrid& grid = {},
                                  const RayLimitOptions& opts = {});

struct SqrtConformality {
    Verdict verdict = Verdict::undetermined;
    /// lim i sqrt(h(iy)) / (iy).
    LimitEstimate ratio;
    /// i / ratio, the predicted lim phi_t / sqrt t.
    std::optional<Complex> predicted_rate;
    /// i * (lim sqrt(h(iy)) / (iy))^{-1}, the same prediction written without
    /// the factor i inside the root; differs from predicted_rate by a unimodular factor.
    std::optional<Complex> predicted_rate_plain_sqrt;
    /// Smallest distance from a sampled h value to the cut (-inf, 0].
    double min_slit_distance = 0.0;
    std::vector<std::pair<double, Complex>> samples;  ///< (y, h(iy))
};

/// Conformality at infinity of i sqrt(h) for a parabolic chart. Throws
/// ChartError when a sampled h value lies on (-inf, 0].
SqrtConformality sqrt_conformality(const HerglotzTriplet& triplet, const KoenigsChart& chart,
                                   const RayGrid& grid = {}, const RayLimitOptions& limit = {},
                                   const KoenigsOptions& opts = {});

} // namespace hsg

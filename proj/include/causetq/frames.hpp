#ifndef CAUSETQ_FRAMES_HPP
#define CAUSETQ_FRAMES_HPP

#include "causetq/quantify.hpp"

namespace causetq {

/**
 * Relation between two frames measured from the projections (m, n) of
 * successive ticks of one onto the chains of the other. Convention:
 * rho = sqrt(m/n), so beta = (m-n)/(m+n) = (rho^2-1)/(rho^2+1).
 */
struct FrameRelation {
    double m = 1.0;
    double n = 1.0;
    double rho = 1.0;
    double beta = 0.0;
    double sigma = 1.0;       // observer-selected scale factor
    double m_variance = 0.0;  // per-tick variance of the projections
    double n_variance = 0.0;
};

/// sqrt(m/n), positive branch. Throws NonPositiveProjectionError.
double rho_from_mn(double m, double n);

/// (m-n)/(m+n), always in (-1, 1) for positive projections.
double beta_from_mn(double m, double n);

struct Boost {
    double beta = 0.0;
    double gamma = 1.0;
    static Boost from_beta(double beta);  // throws SpeedRangeError if |beta| >= 1
    static Boost from_rho(double rho);    // beta = (rho^2-1)/(rho^2+1)
};

/// (p / rho, q * rho). Throws NonPositiveRhoError.
ProjectionPair transform_pair(const ProjectionPair& pair, double rho);

/// t' = gamma (t - beta x), x' = gamma (x - beta t).
Coordinates lorentz_transform(const Coordinates& c, const Boost& boost);

struct InvarianceCheck {
    double s1 = 0.0;  // interval scalar before the transform
    double s2 = 0.0;  // interval scalar of the transformed-and-scaled pair
    bool ok = false;  // s2 == sigma^2 * s1 within 1e-12 relative
};

InvarianceCheck invariance_check(const ProjectionPair& pair, double rho, double sigma);

/// rho and sigma compose multiplicatively; beta follows velocity addition.
FrameRelation compose_relations(const FrameRelation& r12, const FrameRelation& r23);

FrameRelation inverse_relation(const FrameRelation& r);

/**
 * Measures (m, n) as the mean projection differences of `moving`'s successive
 * ticks onto the chains of `reference`. Requires the per-tick differences to
 * be constant up to integer-tick discretization: the standard deviation must
 * stay within max(0.55 ticks, tolerance * mean). Ceiling discretization of a
 * uniform tick sequence contributes at most 0.5; genuinely non-inertial
 * chains exceed the floor.
 *
 * Throws NotCoordinatedError on excess variance, NoProjectionError when
 * fewer than two successive ticks project onto both chains.
 */
FrameRelation measure_frame_relation(const CausalSet& cs, const Frame& reference,
                                     const Frame& moving, double tolerance = 0.1);

}  // namespace causetq

#endif

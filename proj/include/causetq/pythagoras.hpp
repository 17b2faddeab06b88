#ifndef CAUSETQ_PYTHAGORAS_HPP
#define CAUSETQ_PYTHAGORAS_HPP

#include <functional>

#include "causetq/quantify.hpp"

namespace causetq {

/// Three chain pairs and three equal-time events: the D pair quantifies the
/// full spatial interval (e2, e3), the X pair its leg (e1, e3), the Y pair
/// its leg (e1, e2).
struct OrthogonalConfig {
    Frame d_frame;
    Frame x_frame;
    Frame y_frame;
    EventId e1 = 0;
    EventId e2 = 0;
    EventId e3 = 0;
};

/// Coordinates (x1, y1) = (d3 - x3, d2 - y2) the decomposing event must have
/// for the scalar intervals to sum.
std::pair<double, double> orthogonal_event_constraint(double d2, double d3,
                                                      double x3, double y2);

struct PythagorasReport {
    double dd2 = 0.0;  // squared spatial interval from the D pair
    double dx2 = 0.0;  // squared x leg
    double dy2 = 0.0;  // squared y leg
    double residual = 0.0;  // |dd2 - dx2 - dy2|
    bool ok = false;        // residual within the requested tolerance
};

/// Maps an event and a frame to its projection pair; lets callers verify with
/// either poset projections or a continuum quantification.
using PairQuantifier =
    std::function<std::optional<ProjectionPair>(EventId, const Frame&)>;

/**
 * Quantifies the three event pairs in their frames, checks each pair is at
 * equal time within `equal_time_tolerance`, and compares the interval-scalar
 * sum: the squared full interval against the sum of the squared legs.
 * Throws NotEqualTimeError or UnquantifiableError.
 */
PythagorasReport verify_pythagoras(const PairQuantifier& quantify,
                                   const OrthogonalConfig& cfg,
                                   double residual_tolerance,
                                   double equal_time_tolerance);

/// Poset-projection route: tick-level quantification through the causal set.
PythagorasReport verify_pythagoras(const CausalSet& cs, const OrthogonalConfig& cfg,
                                   double residual_tolerance,
                                   double equal_time_tolerance = 1.0);

}  // namespace causetq

#endif

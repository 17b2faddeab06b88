#include "causetq/pythagoras.hpp"

#include <cmath>

namespace causetq {

std::pair<double, double> orthogonal_event_constraint(double d2, double d3,
                                                      double x3, double y2) {
    return {d3 - x3, d2 - y2};
}

namespace {

// Interval pair of (a, b) in one frame; equal-time and quantifiability checks.
ProjectionPair quantified_interval(const PairQuantifier& quantify, const Frame& frame,
                                   EventId a, EventId b, double equal_time_tolerance,
                                   const char* leg) {
    auto pa = quantify(a, frame);
    auto pb = quantify(b, frame);
    if (!pa || !pb)
        throw UnquantifiableError(std::string("event pair not quantifiable in the ") +
                                  leg + " frame");
    ProjectionPair pair = interval_pair(*pa, *pb);
    const double dt = symmetric_scalar(pair) / 2.0;
    if (std::abs(dt) > equal_time_tolerance)
        throw NotEqualTimeError(std::string("time coordinates differ in the ") + leg +
                                " frame beyond tolerance");
    return pair;
}

}  // namespace

PythagorasReport verify_pythagoras(const PairQuantifier& quantify,
                                   const OrthogonalConfig& cfg,
                                   double residual_tolerance,
                                   double equal_time_tolerance) {
    ProjectionPair d = quantified_interval(quantify, cfg.d_frame, cfg.e2, cfg.e3,
                                           equal_time_tolerance, "D");
    ProjectionPair x = quantified_interval(quantify, cfg.x_frame, cfg.e1, cfg.e3,
                                           equal_time_tolerance, "X");
    ProjectionPair y = quantified_interval(quantify, cfg.y_frame, cfg.e1, cfg.e2,
                                           equal_time_tolerance, "Y");

    PythagorasReport report;
    // Spacelike intervals carry a negative interval scalar; the squared
    // spatial lengths are its negation.
    report.dd2 = -interval_scalar(d);
    report.dx2 = -interval_scalar(x);
    report.dy2 = -interval_scalar(y);
    report.residual = std::abs(report.dd2 - report.dx2 - report.dy2);
    report.ok = report.residual <= residual_tolerance;
    return report;
}

PythagorasReport verify_pythagoras(const CausalSet& cs, const OrthogonalConfig& cfg,
                                   double residual_tolerance,
                                   double equal_time_tolerance) {
    PairQuantifier quantify = [&cs](EventId e, const Frame& f) {
        return quantify_event(cs, e, f);
    };
    return verify_pythagoras(quantify, cfg, residual_tolerance, equal_time_tolerance);
}

}  // namespace causetq

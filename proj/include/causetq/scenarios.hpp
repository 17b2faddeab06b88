#ifndef CAUSETQ_SCENARIOS_HPP
#define CAUSETQ_SCENARIOS_HPP

#include "causetq/oracle.hpp"
#include "causetq/pythagoras.hpp"

namespace causetq {

struct NamedFrame {
    std::string name;
    std::string p_chain;
    std::string q_chain;
};

/// A deterministic construction: an embedded causal set, frames named over
/// its chains, and selected events of interest.
struct Scenario {
    std::string name;
    EmbeddedCauset ec;
    std::vector<NamedFrame> frames;
    std::map<std::string, EventId> events;
    std::map<std::string, double> params;

    Frame frame(std::string_view frame_name) const;
    const NamedFrame& named_frame(std::string_view frame_name) const;
    EventId event(std::string_view event_name) const;
};

/// Two synchronized at-rest observer chains over a light sprinkling.
Scenario scenario_fig2b();

/// One rest frame and five probe pairs realizing the interval classes:
/// pairs "pair1".."pair5" classify as {spacelike, timelike, timelike,
/// lightlike, spacelike}.
Scenario scenario_fig3();

/// Four chains P, Q, R, S and a spacelike probe pair between Q and R: frame
/// "QR" bounds the interval, frames "PQ" and "RS" see it as purely temporal.
Scenario scenario_fig5();

/// A rest frame and a coordinated frame moving at velocity 0.6 with at
/// least 100 usable ticks.
Scenario scenario_fig6();

/// A 2+1D right-triangle configuration (legs 3L and 4L, hypotenuse 5L) with
/// three orthogonal chain pairs "D", "X", "Y" and events "e1", "e2", "e3".
/// The geometric scale is L = 1.3 * cbrt(density) * scale_jitter; params
/// carry "scale". `chain_phase` shifts all tick phases; together the two
/// knobs drive discretization-error ensembles.
Scenario scenario_fig7(double density = 4.0, double chain_phase = 0.0,
                       double scale_jitter = 1.0);

/// Rest frame "rest" plus frame "moving" at the given velocity, sized so at
/// least `ticks` successive moving ticks project onto both rest chains.
Scenario scenario_speed(double velocity, int ticks = 100);

/// Three mutually coordinated frames "A" (rest), "B" (v = 0.2), "C"
/// (v = 0.5) for velocity-composition measurements.
Scenario scenario_three_frames();

/// The orthogonal-decomposition config of a fig7-style scenario.
OrthogonalConfig orthogonal_config(const Scenario& s);

/// Stable scenario identifiers accepted by make_scenario.
std::vector<std::string> scenario_names();

Scenario make_scenario(std::string_view id);

/// All named standard scenarios.
std::vector<Scenario> build_standard_scenarios();

}  // namespace causetq

#endif

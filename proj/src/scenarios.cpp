#include "causetq/scenarios.hpp"

#include <cmath>

namespace causetq {

Frame Scenario::frame(std::string_view frame_name) const {
    const NamedFrame& nf = named_frame(frame_name);
    return ec.make_frame(nf.p_chain, nf.q_chain);
}

const NamedFrame& Scenario::named_frame(std::string_view frame_name) const {
    for (const NamedFrame& nf : frames)
        if (nf.name == frame_name) return nf;
    throw std::invalid_argument("no such frame in scenario: " + std::string(frame_name));
}

EventId Scenario::event(std::string_view event_name) const {
    auto it = events.find(std::string(event_name));
    if (it == events.end())
        throw std::invalid_argument("no such event in scenario: " + std::string(event_name));
    return it->second;
}

namespace {

WorldlineSpec rest_chain(double x, double phase = 0.0) {
    WorldlineSpec spec;
    spec.x0 = x;
    spec.phase = phase;
    return spec;
}

WorldlineSpec rest_chain_2d(double x, double y, double phase) {
    WorldlineSpec spec;
    spec.x0 = x;
    spec.y0 = y;
    spec.phase = phase;
    return spec;
}

WorldlineSpec moving_chain(double x0, double v, double phase = 0.0) {
    WorldlineSpec spec;
    spec.x0 = x0;
    spec.vx = v;
    spec.phase = phase;
    return spec;
}

// Radar signals between a comoving pair at proper separation L reach the
// other chain at proper offsets L(1-v) and L(1+v). Both must land well
// inside a tick interval, or the ceiling projection sits on an exact tie
// that floating point resolves erratically. Candidates are binary-exact.
double tie_safe_separation(double v) {
    for (double sep : {2.5, 2.75, 3.125, 3.375, 3.5, 3.625, 3.875, 4.25, 4.375}) {
        const double back = sep * (1.0 - v);
        const double forward = sep * (1.0 + v);
        const double fb = back - std::floor(back);
        const double ff = forward - std::floor(forward);
        if (fb >= 0.2 && fb <= 0.8 && ff >= 0.2 && ff <= 0.8) return sep;
    }
    throw std::logic_error("no tie-safe separation found");
}

}  // namespace

Scenario scenario_fig2b() {
    Scenario s;
    s.name = "fig2b";
    SprinkleConfig config;
    config.dimension = 2;
    config.region = {0.0, 24.0, 0.0, 12.0};
    config.density = 1.5;
    config.seed = 0x2b2b2b;
    s.ec = EmbeddedCauset::sprinkle(config);
    s.ec.embed_observer(rest_chain(4.0), "P");
    s.ec.embed_observer(rest_chain(8.0), "Q");
    s.frames.push_back({"PQ", "P", "Q"});
    return s;
}

Scenario scenario_fig3() {
    Scenario s;
    s.name = "fig3";
    SprinkleConfig config;
    config.dimension = 2;
    config.region = {0.0, 32.0, 0.0, 8.0};
    config.density = 1.0;
    config.seed = 0x313131;
    s.ec = EmbeddedCauset::sprinkle(config);

    // Integer-lattice probe pairs; their radar arrivals are exact integers,
    // so the discrete pairs reproduce the continuum ones.
    const std::pair<MinkowskiPoint, MinkowskiPoint> panels[5] = {
        {{10, 2, 0}, {10, 6, 0}},  // antichain, recorded in opposite order
        {{8, 4, 0}, {12, 4, 0}},   // chain, same order on both
        {{8, 3, 0}, {11, 4, 0}},   // timelike
        {{8, 3, 0}, {10, 5, 0}},   // lightlike
        {{10, 3, 0}, {11, 6, 0}},  // spacelike
    };
    for (int i = 0; i < 5; ++i) {
        const std::string base = "pair" + std::to_string(i + 1);
        s.events[base + "_a"] = s.ec.insert_probe(panels[i].first);
        s.events[base + "_b"] = s.ec.insert_probe(panels[i].second);
    }
    s.ec.embed_observer(rest_chain(0.0), "P");
    s.ec.embed_observer(rest_chain(8.0), "Q");
    s.frames.push_back({"PQ", "P", "Q"});
    return s;
}

Scenario scenario_fig5() {
    Scenario s;
    s.name = "fig5";
    SprinkleConfig config;
    config.dimension = 2;
    config.region = {0.0, 32.0, 0.0, 20.0};
    config.density = 0.5;
    config.seed = 0x515151;
    s.ec = EmbeddedCauset::sprinkle(config);

    s.events["a"] = s.ec.insert_probe({12.0, 8.0, 0.0});
    s.events["b"] = s.ec.insert_probe({12.0, 12.0, 0.0});

    s.ec.embed_observer(rest_chain(2.0), "P");
    s.ec.embed_observer(rest_chain(6.0), "Q");
    s.ec.embed_observer(rest_chain(14.0), "R");
    s.ec.embed_observer(rest_chain(18.0), "S");
    s.frames.push_back({"PQ", "P", "Q"});
    s.frames.push_back({"QR", "Q", "R"});
    s.frames.push_back({"RS", "R", "S"});
    return s;
}

Scenario scenario_speed(double velocity, int ticks) {
    if (!(velocity >= 0.0 && velocity < 1.0))
        throw std::invalid_argument("velocity must be in [0, 1)");
    Scenario s;
    s.name = "speed";
    s.params["velocity"] = velocity;

    const double gamma = 1.0 / std::sqrt(1.0 - velocity * velocity);
    const double bondi = std::sqrt((1.0 + velocity) / (1.0 - velocity));
    const double mover_x0 = 8.3;
    const double rest_p_x = 4.0;

    // The mover recedes from P; its k-th tick reaches P at bondi*k + const.
    // Size the time range so `ticks` successive ticks project onto both rest
    // chains, and keep the far chain ahead of the mover for the whole run.
    const double t_max = std::ceil(bondi * ticks + mover_x0 - rest_p_x + 3.0);
    const double reach = mover_x0 + velocity * t_max;
    const double rest_q_x = rest_p_x + std::ceil(reach - rest_p_x) + 3.0;

    BoxRegion region{0.0, t_max, 0.0, rest_q_x + 6.0};
    s.ec = EmbeddedCauset::from_points(2, region, {});
    s.ec.embed_observer(rest_chain(rest_p_x), "P");
    s.ec.embed_observer(rest_chain(rest_q_x), "Q");
    const double proper_sep = tie_safe_separation(velocity);
    s.ec.embed_observer(moving_chain(mover_x0, velocity), "P2");
    s.ec.embed_observer(moving_chain(mover_x0 + proper_sep / gamma, velocity), "Q2");
    s.frames.push_back({"rest", "P", "Q"});
    s.frames.push_back({"moving", "P2", "Q2"});
    return s;
}

Scenario scenario_fig6() {
    Scenario s = scenario_speed(0.6, 100);
    s.name = "fig6";
    return s;
}

Scenario scenario_three_frames() {
    Scenario s;
    s.name = "three_frames";
    const double vb = 0.2;
    const double vc = 0.5;
    s.params["v_b"] = vb;
    s.params["v_c"] = vc;

    BoxRegion region{0.0, 200.0, 0.0, 130.0};
    s.ec = EmbeddedCauset::from_points(2, region, {});
    s.ec.embed_observer(rest_chain(2.0), "A1");
    s.ec.embed_observer(rest_chain(120.0), "A2");

    const double gamma_b = 1.0 / std::sqrt(1.0 - vb * vb);
    s.ec.embed_observer(moving_chain(10.3, vb), "B1");
    s.ec.embed_observer(moving_chain(10.3 + 60.5 / gamma_b, vb), "B2");

    const double gamma_c = 1.0 / std::sqrt(1.0 - vc * vc);
    s.ec.embed_observer(moving_chain(20.7, vc), "C1");
    s.ec.embed_observer(moving_chain(20.7 + 2.5 / gamma_c, vc), "C2");

    s.frames.push_back({"A", "A1", "A2"});
    s.frames.push_back({"B", "B1", "B2"});
    s.frames.push_back({"C", "C1", "C2"});
    return s;
}

Scenario scenario_fig7(double density, double chain_phase, double scale_jitter) {
    if (!(density > 0.0)) throw std::invalid_argument("density must be positive");
    Scenario s;
    s.name = "fig7";
    const double scale = 1.3 * std::cbrt(density) * scale_jitter;
    s.params["density"] = density;
    s.params["scale"] = scale;

    const double t0 = 8.3;
    const double t_max = t0 + 5.0 * scale + 4.0;
    BoxRegion region{0.0, t_max, -2.0, 4.0 * scale + 2.2, -2.0, 3.0 * scale + 2.2};
    s.ec = EmbeddedCauset::from_points(3, region, {});

    // Right triangle at equal time: the X and Y legs meet at e1.
    s.events["e1"] = s.ec.insert_probe({t0, 0.0, 0.0});
    s.events["e2"] = s.ec.insert_probe({t0, 0.0, 3.0 * scale});
    s.events["e3"] = s.ec.insert_probe({t0, 4.0 * scale, 0.0});

    // Each chain pair sits on the line of the interval it quantifies, one
    // chain on either side, so the continuum projection differences equal
    // the full separations.
    const double ux = 0.8, uy = -0.6;  // unit vector e2 -> e3
    s.ec.embed_observer(rest_chain_2d(-0.73 * ux, 3.0 * scale - 0.73 * uy, chain_phase), "Dp");
    s.ec.embed_observer(rest_chain_2d(4.0 * scale + 1.19 * ux, 1.19 * uy, chain_phase), "Dq");
    s.ec.embed_observer(rest_chain_2d(-0.61, 0.0, chain_phase), "Xp");
    s.ec.embed_observer(rest_chain_2d(4.0 * scale + 0.87, 0.0, chain_phase), "Xq");
    s.ec.embed_observer(rest_chain_2d(0.0, -0.79, chain_phase), "Yp");
    s.ec.embed_observer(rest_chain_2d(0.0, 3.0 * scale + 1.07, chain_phase), "Yq");

    s.frames.push_back({"D", "Dp", "Dq"});
    s.frames.push_back({"X", "Xp", "Xq"});
    s.frames.push_back({"Y", "Yp", "Yq"});
    return s;
}

OrthogonalConfig orthogonal_config(const Scenario& s) {
    return OrthogonalConfig{s.frame("D"), s.frame("X"), s.frame("Y"),
                            s.event("e1"), s.event("e2"), s.event("e3")};
}

std::vector<std::string> scenario_names() {
    return {"fig2b", "fig3", "fig5", "fig6", "fig7"};
}

Scenario make_scenario(std::string_view id) {
    if (id == "fig2b") return scenario_fig2b();
    if (id == "fig3") return scenario_fig3();
    if (id == "fig5") return scenario_fig5();
    if (id == "fig6") return scenario_fig6();
    if (id == "fig7") return scenario_fig7();
    throw std::invalid_argument("unknown scenario: " + std::string(id));
}

std::vector<Scenario> build_standard_scenarios() {
    std::vector<Scenario> all;
    for (const std::string& name : scenario_names()) all.push_back(make_scenario(name));
    return all;
}

}  // namespace causetq

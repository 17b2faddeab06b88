#include "doctest.h"

#include <cmath>

#include "causetq/pythagoras.hpp"
#include "causetq/scenarios.hpp"

using namespace causetq;

namespace {

PairQuantifier continuum(const EmbeddedCauset& ec) {
    return [&ec](EventId e, const Frame& f) -> std::optional<ProjectionPair> {
        return ProjectionPair{continuum_valuation(ec, ec.point(e), f.p_chain()),
                              continuum_valuation(ec, ec.point(e), f.q_chain())};
    };
}

}  // namespace

TEST_CASE("orthogonal event constraint") {
    SUBCASE("aligned interval puts the decomposing event at the foot") {
        const auto [x1, y1] = orthogonal_event_constraint(3.0, 4.0, 4.0, 3.0);
        CHECK(x1 == 0.0);
        CHECK(y1 == 0.0);
    }
    SUBCASE("degenerate x leg") {
        const auto [x1, y1] = orthogonal_event_constraint(2.0, 7.0, 7.0, 5.0);
        CHECK(x1 == 0.0);
        CHECK(y1 == -3.0);
    }
    SUBCASE("invariant under a common offset of d3 and x3") {
        const auto base = orthogonal_event_constraint(1.5, 4.25, 2.0, 0.5);
        const auto shifted = orthogonal_event_constraint(1.5, 4.25 + 11.0, 2.0 + 11.0, 0.5);
        CHECK(base == shifted);
    }
}

TEST_CASE("right triangle scenario, continuum route") {
    Scenario s = scenario_fig7(4.0);
    const double norm = 1.0 / (s.params.at("scale") * s.params.at("scale"));
    const OrthogonalConfig cfg = orthogonal_config(s);
    const PythagorasReport r = verify_pythagoras(continuum(s.ec), cfg, 1e-9, 1e-9);
    CHECK(r.ok);
    CHECK(r.dd2 * norm == doctest::Approx(25.0).epsilon(1e-12));
    CHECK(r.dx2 * norm == doctest::Approx(16.0).epsilon(1e-12));
    CHECK(r.dy2 * norm == doctest::Approx(9.0).epsilon(1e-12));

    // The composed metric agrees with the single-interval form.
    CHECK(-r.dd2 == doctest::Approx(-r.dx2 - r.dy2).epsilon(1e-12));
}

TEST_CASE("unit-scale triangle is exact even discretely") {
    // Integer legs and aligned phases make the poset projections land
    // exactly on the continuum arrivals.
    Scenario s = scenario_fig7(1.0, 0.0, 1.0 / 1.3);
    CHECK(s.params.at("scale") == doctest::Approx(1.0).epsilon(1e-12));
    const OrthogonalConfig cfg = orthogonal_config(s);
    const PythagorasReport discrete = verify_pythagoras(s.ec.causet(), cfg, 1e-9, 1.0);
    CHECK(discrete.ok);
    CHECK(discrete.dd2 == 25.0);
    CHECK(discrete.dx2 == 16.0);
    CHECK(discrete.dy2 == 9.0);
    CHECK(discrete.residual == 0.0);
}

TEST_CASE("swapping the leg frames leaves the residual unchanged") {
    Scenario s = scenario_fig7(4.0, 0.37);
    const OrthogonalConfig cfg = orthogonal_config(s);
    OrthogonalConfig swapped{cfg.d_frame, cfg.y_frame, cfg.x_frame,
                             cfg.e1, cfg.e3, cfg.e2};
    const PythagorasReport a = verify_pythagoras(s.ec.causet(), cfg, 1e30, 1.0);
    const PythagorasReport b = verify_pythagoras(s.ec.causet(), swapped, 1e30, 1.0);
    CHECK(a.residual == b.residual);
    CHECK(a.dd2 == b.dd2);
    CHECK(a.dx2 == b.dy2);
    CHECK(a.dy2 == b.dx2);
}

TEST_CASE("collapsed leg reduces to a single interval") {
    EmbeddedCauset ec = EmbeddedCauset::from_points(
        3, {0.0, 24.0, -2.0, 6.0, -2.0, 2.0}, {});
    const EventId e1 = ec.insert_probe({7.3, 0.0, 0.0});
    const EventId e3 = ec.insert_probe({7.3, 4.0, 0.0});
    ec.embed_observer({-0.61, 0.0, 0, 0, 1.0, 0.0}, "Dp");
    ec.embed_observer({4.87, 0.0, 0, 0, 1.0, 0.0}, "Dq");
    ec.embed_observer({-1.33, 0.0, 0, 0, 1.0, 0.0}, "Xp");
    ec.embed_observer({4.41, 0.0, 0, 0, 1.0, 0.0}, "Xq");
    ec.embed_observer({0.0, -0.7, 0, 0, 1.0, 0.0}, "Yp");
    ec.embed_observer({0.0, 0.9, 0, 0, 1.0, 0.0}, "Yq");

    // e1 doubles as event 2: the y leg collapses to zero.
    OrthogonalConfig cfg{ec.make_frame("Dp", "Dq"), ec.make_frame("Xp", "Xq"),
                         ec.make_frame("Yp", "Yq"), e1, e1, e3};
    const PythagorasReport discrete = verify_pythagoras(ec.causet(), cfg, 1e-9, 1.0);
    CHECK(discrete.ok);
    CHECK(discrete.dd2 == 16.0);
    CHECK(discrete.dx2 == 16.0);
    CHECK(discrete.dy2 == 0.0);
    CHECK(discrete.residual == 0.0);

    const PythagorasReport cont = verify_pythagoras(continuum(ec), cfg, 1e-9, 1e-9);
    CHECK(cont.ok);
    CHECK(cont.dd2 == doctest::Approx(16.0).epsilon(1e-12));
}

TEST_CASE("events at different times are rejected") {
    EmbeddedCauset ec = EmbeddedCauset::from_points(
        3, {0.0, 30.0, -2.0, 6.0, -2.0, 5.0}, {});
    const EventId e1 = ec.insert_probe({7.3, 0.0, 0.0});
    const EventId e2 = ec.insert_probe({12.3, 0.0, 3.0});  // three ticks later
    const EventId e3 = ec.insert_probe({7.3, 4.0, 0.0});
    ec.embed_observer({-0.61, 0.0, 0, 0, 1.0, 0.0}, "Ap");
    ec.embed_observer({4.87, 0.0, 0, 0, 1.0, 0.0}, "Aq");
    ec.embed_observer({0.0, -0.7, 0, 0, 1.0, 0.0}, "Bp");
    ec.embed_observer({0.0, 3.9, 0, 0, 1.0, 0.0}, "Bq");
    OrthogonalConfig cfg{ec.make_frame("Ap", "Aq"), ec.make_frame("Ap", "Aq"),
                         ec.make_frame("Bp", "Bq"), e1, e2, e3};
    CHECK_THROWS_AS(verify_pythagoras(ec.causet(), cfg, 1e-9, 1.0), NotEqualTimeError);
}

TEST_CASE("unquantifiable events are rejected") {
    EmbeddedCauset ec = EmbeddedCauset::from_points(
        3, {0.0, 10.0, -2.0, 6.0, -2.0, 2.0}, {});
    const EventId e1 = ec.insert_probe({9.7, 0.0, 0.0});  // beyond chain coverage
    const EventId e3 = ec.insert_probe({9.7, 4.0, 0.0});
    ec.embed_observer({-0.61, 0.0, 0, 0, 1.0, 0.0}, "Dp");
    ec.embed_observer({4.87, 0.0, 0, 0, 1.0, 0.0}, "Dq");
    OrthogonalConfig cfg{ec.make_frame("Dp", "Dq"), ec.make_frame("Dp", "Dq"),
                         ec.make_frame("Dp", "Dq"), e1, e1, e3};
    CHECK_THROWS_AS(verify_pythagoras(ec.causet(), cfg, 1e-9, 1.0), UnquantifiableError);
}

#include "doctest.h"

#include <cmath>
#include <random>

#include "causetq/oracle.hpp"

using namespace causetq;

namespace {

SprinkleConfig small_config(std::uint64_t seed) {
    SprinkleConfig config;
    config.dimension = 2;
    config.region = {0.0, 16.0, 0.0, 12.0};
    config.density = 2.0;
    config.seed = seed;
    return config;
}

}  // namespace

TEST_CASE("sprinkle configuration validation") {
    SprinkleConfig config = small_config(1);
    config.density = 0.0;
    CHECK_THROWS_AS(EmbeddedCauset::sprinkle(config), RegionError);
    config = small_config(1);
    config.region.t_max = config.region.t_min;
    CHECK_THROWS_AS(EmbeddedCauset::sprinkle(config), RegionError);
    config = small_config(1);
    config.dimension = 4;
    CHECK_THROWS_AS(EmbeddedCauset::sprinkle(config), RegionError);
}

TEST_CASE("sprinkling is deterministic for a fixed seed") {
    const EmbeddedCauset a = EmbeddedCauset::sprinkle(small_config(99));
    const EmbeddedCauset b = EmbeddedCauset::sprinkle(small_config(99));
    REQUIRE(a.event_count() == b.event_count());
    for (EventId e = 0; e < a.event_count(); ++e) {
        CHECK(a.point(e).t == b.point(e).t);
        CHECK(a.point(e).x == b.point(e).x);
    }
    CHECK(a.causet().covers() == b.causet().covers());

    const EmbeddedCauset c = EmbeddedCauset::sprinkle(small_config(100));
    CHECK(a.event_count() != c.event_count());  // different seed, different draw
}

TEST_CASE("near-zero density gives a near-empty causal set") {
    SprinkleConfig config = small_config(7);
    config.density = 1e-9;
    const EmbeddedCauset ec = EmbeddedCauset::sprinkle(config);
    CHECK(ec.event_count() <= 1);
}

TEST_CASE("event count is Poisson with mean density times volume") {
    // Mean over 100 seeds within three standard errors of 96.
    const double expected = 0.5 * 16.0 * 12.0;
    SprinkleConfig config = small_config(0);
    config.density = 0.5;
    double total = 0.0;
    const int runs = 100;
    for (int seed = 0; seed < runs; ++seed) {
        config.seed = 1000 + seed;
        total += static_cast<double>(EmbeddedCauset::sprinkle(config).event_count());
    }
    const double mean = total / runs;
    const double standard_error = std::sqrt(expected / runs);
    CHECK(std::abs(mean - expected) <= 3.0 * standard_error);
}

TEST_CASE("order agrees with the light cones, exhaustively") {
    SprinkleConfig config;
    config.dimension = 2;
    config.region = {0.0, 32.0, 0.0, 16.0};
    config.density = 4.0;
    config.seed = 11;
    const EmbeddedCauset ec = EmbeddedCauset::sprinkle(config);
    const CausalSet& cs = ec.causet();
    REQUIRE(cs.size() > 1800);
    REQUIRE(cs.size() <= 2400);
    long long mismatches = 0;
    for (EventId a = 0; a < cs.size(); ++a)
        for (EventId b = 0; b < cs.size(); ++b) {
            const MinkowskiPoint& pa = ec.point(a);
            const MinkowskiPoint& pb = ec.point(b);
            const bool cone = pb.t - pa.t > 0.0 && pb.t - pa.t >= std::abs(pb.x - pa.x);
            if (cs.less(a, b) != cone) ++mismatches;
        }
    CHECK(mismatches == 0);
}

TEST_CASE("light cone boundary counts as related") {
    EmbeddedCauset ec = EmbeddedCauset::from_points(2, {0.0, 10.0, 0.0, 10.0}, {});
    const EventId a = ec.insert_probe({1.0, 2.0, 0.0});
    const EventId on_cone = ec.insert_probe({5.0, 6.0, 0.0});
    const EventId spacelike = ec.insert_probe({2.0, 7.0, 0.0});
    const EventId equal_time = ec.insert_probe({1.0, 9.0, 0.0});
    CHECK(ec.causet().relation(a, on_cone) == Order::Before);
    CHECK(ec.causet().relation(a, spacelike) == Order::Incomparable);
    CHECK(ec.causet().relation(a, equal_time) == Order::Incomparable);
    CHECK(ec.causet().is_antichain(std::vector<EventId>{a, spacelike}));
}

TEST_CASE("observer embedding") {
    SUBCASE("rest worldline ticks at phase plus integers") {
        EmbeddedCauset ec = EmbeddedCauset::from_points(2, {0.0, 12.0, 0.0, 8.0}, {});
        const ObserverChain& chain = ec.embed_observer({3.0, 0, 0, 0, 1.0, 0.25}, "P");
        REQUIRE(chain.size() == 12);
        for (std::size_t k = 0; k < chain.size(); ++k) {
            CHECK(ec.point(chain.event_at(k)).t ==
                  doctest::Approx(0.25 + static_cast<double>(k)).epsilon(1e-15));
            CHECK(ec.point(chain.event_at(k)).x == 3.0);
        }
    }
    SUBCASE("moving worldline dilates the coordinate tick spacing") {
        EmbeddedCauset ec = EmbeddedCauset::from_points(2, {0.0, 20.0, 0.0, 20.0}, {});
        const ObserverChain& chain = ec.embed_observer({1.0, 0, 0.6, 0, 1.0, 0.0}, "M");
        const double dt = ec.point(chain.event_at(1)).t - ec.point(chain.event_at(0)).t;
        CHECK(dt == doctest::Approx(1.25).epsilon(1e-12));
        CHECK(ec.causet().is_chain(chain.events()));
    }
    SUBCASE("worldlines leaving the region are rejected") {
        EmbeddedCauset ec = EmbeddedCauset::from_points(2, {0.0, 20.0, 0.0, 5.0}, {});
        CHECK_THROWS_AS(ec.embed_observer({1.0, 0, 0.6, 0, 1.0, 0.0}, "M"),
                        WorldlineRegionError);
        CHECK_THROWS_AS(ec.embed_observer({1.0, 0, 1.0, 0, 1.0, 0.0}, "L"),
                        WorldlineRegionError);
    }
}

TEST_CASE("radar quantification") {
    EmbeddedCauset ec = EmbeddedCauset::from_points(2, {0.0, 32.0, 0.0, 8.0}, {});
    const EventId midway = ec.insert_probe({0.0, 4.0, 0.0});
    const EventId generic = ec.insert_probe({5.3, 2.6, 0.0});
    const EventId late = ec.insert_probe({31.5, 4.0, 0.0});
    ec.embed_observer({0.0, 0, 0, 0, 1.0, 0.0}, "P");
    ec.embed_observer({8.0, 0, 0, 0, 1.0, 0.0}, "Q");

    SUBCASE("a tick of the chain is its own projection") {
        const ObserverChain& p = ec.chain("P");
        const RadarQuant rq = radar_quantify(ec, p.event_at(5), "P", "Q");
        CHECK(rq.continuum.p == 5.0);
        CHECK(rq.discrete.p == 5.0);
    }
    SUBCASE("midway event splits the separation") {
        const RadarQuant rq = radar_quantify(ec, midway, "P", "Q");
        CHECK(rq.continuum == ProjectionPair{4.0, 4.0});
        CHECK(coordinates(rq.continuum) == Coordinates{4.0, 0.0});
        CHECK(rq.discrete == ProjectionPair{4.0, 4.0});  // integer arrival ties
    }
    SUBCASE("discrete projections are the ceiling of the continuum values") {
        const RadarQuant rq = radar_quantify(ec, generic, "P", "Q");
        CHECK(rq.continuum.p == doctest::Approx(7.9).epsilon(1e-12));
        CHECK(rq.continuum.q == doctest::Approx(10.7).epsilon(1e-12));
        CHECK(rq.discrete.p == std::ceil(rq.continuum.p));
        CHECK(rq.discrete.q == std::ceil(rq.continuum.q));
    }
    SUBCASE("events beyond coverage raise or return empty") {
        CHECK_THROWS_AS(radar_quantify(ec, late, "P", "Q"), CoverageError);
        CHECK_FALSE(maybe_radar_quantify(ec, late, "P", "Q").has_value());
    }
}

TEST_CASE("discrete projections track the continuum within one tick") {
    SprinkleConfig config;
    config.dimension = 2;
    config.region = {0.0, 32.0, 0.0, 32.0};
    config.density = 4.0;
    config.seed = 0xBEEF7;
    EmbeddedCauset ec = EmbeddedCauset::sprinkle(config);
    ec.embed_observer({12.0, 0, 0, 0, 1.0, 0.0}, "P");
    ec.embed_observer({20.0, 0, 0, 0, 1.0, 0.0}, "Q");

    long long count = 0;
    double sum = 0.0;
    for (EventId e = 0; e < ec.sprinkled_count(); ++e) {
        auto rq = maybe_radar_quantify(ec, e, "P", "Q");
        if (!rq) continue;
        const double ep = rq->discrete.p - rq->continuum.p;
        const double eq = rq->discrete.q - rq->continuum.q;
        CHECK(ep >= 0.0);
        CHECK(ep < 1.0);
        CHECK(eq >= 0.0);
        CHECK(eq < 1.0);
        sum += ep + eq;
        count += 2;
    }
    REQUIRE(count >= 2000);
    CHECK(sum / static_cast<double>(count) <= 0.5);
}

TEST_CASE("embedding events after building the order rebuilds it") {
    EmbeddedCauset ec = EmbeddedCauset::from_points(2, {0.0, 8.0, 0.0, 8.0}, {});
    ec.insert_probe({1.0, 4.0, 0.0});
    CHECK(ec.causet().size() == 1);
    ec.insert_probe({3.0, 4.0, 0.0});
    CHECK(ec.causet().size() == 2);
    CHECK(ec.causet().relation(0, 1) == Order::Before);
}

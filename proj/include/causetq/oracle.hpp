#ifndef CAUSETQ_ORACLE_HPP
#define CAUSETQ_ORACLE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "causetq/causal_set.hpp"
#include "causetq/quantify.hpp"

namespace causetq {

/// Event position in flat spacetime, natural units (light speed 1).
/// y is unused in 1+1D.
struct MinkowskiPoint {
    double t = 0.0;
    double x = 0.0;
    double y = 0.0;
};

struct BoxRegion {
    double t_min = 0.0, t_max = 0.0;
    double x_min = 0.0, x_max = 0.0;
    double y_min = 0.0, y_max = 0.0;  // ignored in 1+1D

    double volume(int dimension) const;
};

struct SprinkleConfig {
    int dimension = 2;  // spacetime dimension: 2 (1+1D) or 3 (2+1D)
    BoxRegion region;
    double density = 1.0;  // expected events per unit volume
    std::uint64_t seed = 0;
};

/// A clock worldline: straight line from (t_min, position0) at constant
/// subluminal velocity, ticking at proper-time multiples of tick_interval
/// offset by phase.
struct WorldlineSpec {
    double x0 = 0.0;
    double y0 = 0.0;
    double vx = 0.0;
    double vy = 0.0;
    double tick_interval = 1.0;
    double phase = 0.0;

    double speed() const;
    double gamma() const;
};

/**
 * A causal set carrying ground-truth coordinates per event. Events are
 * related exactly when they are light-cone related in the embedding.
 * Sprinkled events come first; observer ticks are appended by
 * embed_observer. The order structure is built lazily on first access and
 * the result is immutable.
 */
class EmbeddedCauset {
public:
    EmbeddedCauset() = default;

    /// Poisson sprinkling: the event count is Poisson with mean
    /// density * volume, positions independent-uniform, bit-reproducible
    /// from the seed. Throws RegionError on an empty region or bad config.
    static EmbeddedCauset sprinkle(const SprinkleConfig& config);

    /// Inserts tick events along the worldline, one per proper-time interval,
    /// valued 0, 1, 2, ... Throws WorldlineRegionError if a generated tick
    /// leaves the spatial region.
    const ObserverChain& embed_observer(const WorldlineSpec& spec, const std::string& name);

    /// Inserts a single event at an exact position.
    EventId insert_probe(const MinkowskiPoint& p);

    const CausalSet& causet() const;

    int dimension() const { return dimension_; }
    const BoxRegion& region() const { return region_; }
    std::size_t event_count() const { return points_.size(); }
    std::size_t sprinkled_count() const { return sprinkled_count_; }
    const MinkowskiPoint& point(EventId e) const { return points_.at(e); }

    const ObserverChain& chain(std::string_view name) const;
    const WorldlineSpec& chain_spec(std::string_view name) const;
    std::vector<std::string> chain_names() const;

    /// Frame over two embedded chains; validates synchronization.
    Frame make_frame(std::string_view p_name, std::string_view q_name) const;

    /// Light-cone relation of the embedding: a can influence b.
    bool cone_related(EventId a, EventId b) const;

    /// Direct construction from given points (trusted; used by the loader).
    static EmbeddedCauset from_points(int dimension, BoxRegion region,
                                      std::vector<MinkowskiPoint> points);

private:
    EventId add_event(const MinkowskiPoint& p);

    int dimension_ = 2;
    BoxRegion region_;
    std::vector<MinkowskiPoint> points_;
    std::size_t sprinkled_count_ = 0;
    std::map<std::string, ObserverChain, std::less<>> chains_;
    std::map<std::string, WorldlineSpec, std::less<>> chain_specs_;
    mutable std::optional<CausalSet> causet_cache_;
};

struct RadarQuant {
    ProjectionPair continuum;  // ideal radar valuations, real-valued
    ProjectionPair discrete;   // actual poset projections
};

/**
 * Quantifies an event in a frame of two at-rest chains both ways: the
 * continuum radar valuation (t + distance, converted to tick units and
 * shifted by the chain phase) and the discrete poset projection. The two
 * differ by less than one tick per component. Throws CoverageError when the
 * event is not below any tick of either chain.
 */
RadarQuant radar_quantify(const EmbeddedCauset& ec, EventId e,
                          std::string_view p_name, std::string_view q_name);

/// As radar_quantify, but absence of coverage is a value.
std::optional<RadarQuant> maybe_radar_quantify(const EmbeddedCauset& ec, EventId e,
                                               std::string_view p_name,
                                               std::string_view q_name);

/// Continuum radar valuation of a point on one at-rest chain.
double radar_valuation(const EmbeddedCauset& ec, const MinkowskiPoint& p,
                       std::string_view chain_name);

/// Continuum radar valuation against an embedded at-rest chain, with the
/// chain's site, tick interval and label offset read off its own ticks.
double continuum_valuation(const EmbeddedCauset& ec, const MinkowskiPoint& p,
                           const ObserverChain& chain);

/// Deterministic RNG helpers, fixed algorithms so seeded output is
/// bit-identical across platforms: 53-bit uniforms from mt19937_64 and a
/// Poisson count via the exponential race.
namespace rng {
double uniform01(std::mt19937_64& gen);
double uniform(std::mt19937_64& gen, double lo, double hi);
std::uint64_t poisson(std::mt19937_64& gen, double mean);
}  // namespace rng

}  // namespace causetq

#endif

#include "causetq/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace causetq {

namespace rng {

double uniform01(std::mt19937_64& gen) {
    // Top 53 bits; [0, 1). Fixed mapping, independent of the standard
    // library's distribution implementations.
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

double uniform(std::mt19937_64& gen, double lo, double hi) {
    return lo + uniform01(gen) * (hi - lo);
}

std::uint64_t poisson(std::mt19937_64& gen, double mean) {
    // Exponential race: the count of unit-rate arrivals before `mean`.
    std::uint64_t count = 0;
    double sum = 0.0;
    while (true) {
        sum += -std::log(1.0 - uniform01(gen));
        if (sum > mean) break;
        ++count;
    }
    return count;
}

}  // namespace rng

double BoxRegion::volume(int dimension) const {
    double v = (t_max - t_min) * (x_max - x_min);
    if (dimension == 3) v *= (y_max - y_min);
    return v;
}

double WorldlineSpec::speed() const { return std::sqrt(vx * vx + vy * vy); }

double WorldlineSpec::gamma() const {
    const double v2 = vx * vx + vy * vy;
    return 1.0 / std::sqrt(1.0 - v2);
}

namespace {

double spatial_distance(int dimension, const MinkowskiPoint& a, const MinkowskiPoint& b) {
    const double dx = b.x - a.x;
    if (dimension == 2) return std::abs(dx);
    const double dy = b.y - a.y;
    return std::sqrt(dx * dx + dy * dy);
}

}  // namespace

bool EmbeddedCauset::cone_related(EventId a, EventId b) const {
    const MinkowskiPoint& pa = points_.at(a);
    const MinkowskiPoint& pb = points_.at(b);
    const double dt = pb.t - pa.t;
    // Strictly later and inside-or-on the light cone. Distinct events at
    // equal times are never related; arrival exactly on the cone counts.
    return dt > 0.0 && dt >= spatial_distance(dimension_, pa, pb);
}

EmbeddedCauset EmbeddedCauset::sprinkle(const SprinkleConfig& config) {
    if (config.dimension != 2 && config.dimension != 3)
        throw RegionError("spacetime dimension must be 2 or 3");
    if (!(config.density > 0.0)) throw RegionError("density must be positive");
    const double volume = config.region.volume(config.dimension);
    if (!(volume > 0.0)) throw RegionError("region volume must be positive");

    EmbeddedCauset ec;
    ec.dimension_ = config.dimension;
    ec.region_ = config.region;

    std::mt19937_64 gen(config.seed);
    const std::uint64_t count = rng::poisson(gen, config.density * volume);
    ec.points_.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        MinkowskiPoint p;
        p.t = rng::uniform(gen, config.region.t_min, config.region.t_max);
        p.x = rng::uniform(gen, config.region.x_min, config.region.x_max);
        if (config.dimension == 3) p.y = rng::uniform(gen, config.region.y_min, config.region.y_max);
        ec.points_.push_back(p);
    }
    ec.sprinkled_count_ = ec.points_.size();
    return ec;
}

EmbeddedCauset EmbeddedCauset::from_points(int dimension, BoxRegion region,
                                           std::vector<MinkowskiPoint> points) {
    EmbeddedCauset ec;
    ec.dimension_ = dimension;
    ec.region_ = region;
    ec.points_ = std::move(points);
    ec.sprinkled_count_ = ec.points_.size();
    return ec;
}

EventId EmbeddedCauset::add_event(const MinkowskiPoint& p) {
    causet_cache_.reset();
    points_.push_back(p);
    return static_cast<EventId>(points_.size() - 1);
}

EventId EmbeddedCauset::insert_probe(const MinkowskiPoint& p) { return add_event(p); }

const ObserverChain& EmbeddedCauset::embed_observer(const WorldlineSpec& spec,
                                                    const std::string& name) {
    if (!(spec.speed() < 1.0))
        throw WorldlineRegionError("worldline speed must be below 1");
    if (!(spec.tick_interval > 0.0))
        throw WorldlineRegionError("tick interval must be positive");
    if (spec.phase < 0.0)
        throw WorldlineRegionError("tick phase must be non-negative");
    if (chains_.count(name)) throw std::invalid_argument("chain name already used: " + name);

    const double gamma = spec.gamma();
    std::vector<EventId> events;
    std::vector<long long> valuations;
    for (long long k = 0;; ++k) {
        const double proper = spec.phase + static_cast<double>(k) * spec.tick_interval;
        const double t = region_.t_min + gamma * proper;
        if (t > region_.t_max) break;
        MinkowskiPoint p;
        p.t = t;
        p.x = spec.x0 + spec.vx * (t - region_.t_min);
        p.y = spec.y0 + spec.vy * (t - region_.t_min);
        if (p.x < region_.x_min || p.x > region_.x_max ||
            (dimension_ == 3 && (p.y < region_.y_min || p.y > region_.y_max)))
            throw WorldlineRegionError("worldline tick falls outside the region: " + name);
        events.push_back(add_event(p));
        valuations.push_back(k);
    }
    if (events.empty())
        throw WorldlineRegionError("worldline generates no ticks inside the region: " + name);

    // Successive ticks are timelike separated, so the chain invariants hold
    // by construction.
    chains_.emplace(name, ObserverChain::trusted(std::move(events), std::move(valuations)));
    chain_specs_.emplace(name, spec);
    return chains_.at(name);
}

const CausalSet& EmbeddedCauset::causet() const {
    if (causet_cache_) return *causet_cache_;

    const std::size_t n = points_.size();
    std::vector<EventId> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](EventId a, EventId b) {
        if (points_[a].t != points_[b].t) return points_[a].t < points_[b].t;
        return a < b;
    });

    // The light-cone relation is transitively closed already; relate each
    // pair directly, scanning in time order.
    BitMatrix closure(n);
    for (std::size_t i = 0; i < n; ++i) {
        const EventId a = order[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            const EventId b = order[j];
            if (cone_related(a, b)) closure.set(a, b);
        }
    }
    causet_cache_ = CausalSet::from_closure(std::move(closure), std::move(order));
    return *causet_cache_;
}

const ObserverChain& EmbeddedCauset::chain(std::string_view name) const {
    auto it = chains_.find(name);
    if (it == chains_.end())
        throw std::invalid_argument("no such chain: " + std::string(name));
    return it->second;
}

const WorldlineSpec& EmbeddedCauset::chain_spec(std::string_view name) const {
    auto it = chain_specs_.find(name);
    if (it == chain_specs_.end())
        throw std::invalid_argument("no such chain: " + std::string(name));
    return it->second;
}

std::vector<std::string> EmbeddedCauset::chain_names() const {
    std::vector<std::string> names;
    names.reserve(chains_.size());
    for (const auto& [name, chain] : chains_) names.push_back(name);
    return names;
}

Frame EmbeddedCauset::make_frame(std::string_view p_name, std::string_view q_name) const {
    return Frame::make(causet(), chain(p_name), chain(q_name));
}

double radar_valuation(const EmbeddedCauset& ec, const MinkowskiPoint& p,
                       std::string_view chain_name) {
    const WorldlineSpec& spec = ec.chain_spec(chain_name);
    if (spec.speed() != 0.0)
        throw std::logic_error("radar valuation requires an at-rest chain");
    MinkowskiPoint site{ec.region().t_min, spec.x0, spec.y0};
    const double arrival = p.t + spatial_distance(ec.dimension(), p, site);
    return (arrival - ec.region().t_min - spec.phase) / spec.tick_interval;
}

double continuum_valuation(const EmbeddedCauset& ec, const MinkowskiPoint& p,
                           const ObserverChain& chain) {
    if (chain.size() < 2)
        throw std::logic_error("continuum valuation needs at least two ticks");
    const MinkowskiPoint& first = ec.point(chain.event_at(0));
    const MinkowskiPoint& second = ec.point(chain.event_at(1));
    if (first.x != second.x || first.y != second.y)
        throw std::logic_error("continuum valuation requires an at-rest chain");
    const double interval = second.t - first.t;
    const double arrival = p.t + spatial_distance(ec.dimension(), p, first);
    return static_cast<double>(chain.valuation_at(0)) + (arrival - first.t) / interval;
}

std::optional<RadarQuant> maybe_radar_quantify(const EmbeddedCauset& ec, EventId e,
                                               std::string_view p_name,
                                               std::string_view q_name) {
    auto dp = project(ec.causet(), e, ec.chain(p_name));
    auto dq = project(ec.causet(), e, ec.chain(q_name));
    if (!dp || !dq) return std::nullopt;
    RadarQuant rq;
    rq.continuum.p = radar_valuation(ec, ec.point(e), p_name);
    rq.continuum.q = radar_valuation(ec, ec.point(e), q_name);
    rq.discrete.p = static_cast<double>(*dp);
    rq.discrete.q = static_cast<double>(*dq);
    return rq;
}

RadarQuant radar_quantify(const EmbeddedCauset& ec, EventId e,
                          std::string_view p_name, std::string_view q_name) {
    auto rq = maybe_radar_quantify(ec, e, p_name, q_name);
    if (!rq) throw CoverageError("event is not below any tick of the chain");
    return *rq;
}

}  // namespace causetq

#include "causetq/frames.hpp"

#include <cmath>
#include <vector>

namespace causetq {

double rho_from_mn(double m, double n) {
    if (!(m > 0.0) || !(n > 0.0))
        throw NonPositiveProjectionError("projections m, n must be positive");
    return std::sqrt(m / n);
}

double beta_from_mn(double m, double n) {
    if (!(m > 0.0) || !(n > 0.0))
        throw NonPositiveProjectionError("projections m, n must be positive");
    return (m - n) / (m + n);
}

Boost Boost::from_beta(double beta) {
    if (!(std::abs(beta) < 1.0)) throw SpeedRangeError("|beta| must be < 1");
    return {beta, 1.0 / std::sqrt(1.0 - beta * beta)};
}

Boost Boost::from_rho(double rho) {
    if (!(rho > 0.0)) throw NonPositiveRhoError("rho must be positive");
    return {(rho * rho - 1.0) / (rho * rho + 1.0), (rho + 1.0 / rho) / 2.0};
}

ProjectionPair transform_pair(const ProjectionPair& pair, double rho) {
    if (!(rho > 0.0)) throw NonPositiveRhoError("rho must be positive");
    return {pair.p / rho, pair.q * rho};
}

Coordinates lorentz_transform(const Coordinates& c, const Boost& boost) {
    if (!(std::abs(boost.beta) < 1.0)) throw SpeedRangeError("|beta| must be < 1");
    return {boost.gamma * (c.t - boost.beta * c.x),
            boost.gamma * (c.x - boost.beta * c.t)};
}

InvarianceCheck invariance_check(const ProjectionPair& pair, double rho, double sigma) {
    if (!(rho > 0.0)) throw NonPositiveRhoError("rho must be positive");
    if (!(sigma > 0.0)) throw NonPositiveRhoError("sigma must be positive");
    ProjectionPair transformed = transform_pair(pair, rho);
    transformed.p *= sigma;
    transformed.q *= sigma;
    InvarianceCheck check;
    check.s1 = interval_scalar(pair);
    check.s2 = interval_scalar(transformed);
    const double expected = sigma * sigma * check.s1;
    check.ok = std::abs(check.s2 - expected) <=
               1e-12 * std::max(1.0, std::abs(expected));
    return check;
}

FrameRelation compose_relations(const FrameRelation& r12, const FrameRelation& r23) {
    FrameRelation r;
    r.rho = r12.rho * r23.rho;
    r.beta = (r.rho * r.rho - 1.0) / (r.rho * r.rho + 1.0);
    r.sigma = r12.sigma * r23.sigma;
    // Tick scales sqrt(mn) compose multiplicatively along the chain of frames.
    const double scale = std::sqrt(r12.m * r12.n * r23.m * r23.n);
    r.m = r.rho * scale;
    r.n = scale / r.rho;
    return r;
}

FrameRelation inverse_relation(const FrameRelation& r) {
    FrameRelation inv;
    inv.m = 1.0 / r.m;
    inv.n = 1.0 / r.n;
    inv.rho = rho_from_mn(inv.m, inv.n);
    inv.beta = beta_from_mn(inv.m, inv.n);
    inv.sigma = 1.0 / r.sigma;
    return inv;
}

namespace {

struct TickStats {
    double mean = 0.0;
    double variance = 0.0;  // population variance of per-tick differences
    std::size_t count = 0;
};

TickStats diff_stats(const std::vector<long long>& values) {
    TickStats stats;
    if (values.size() < 2) return stats;
    std::vector<double> diffs;
    diffs.reserve(values.size() - 1);
    for (std::size_t i = 1; i < values.size(); ++i)
        diffs.push_back(static_cast<double>(values[i] - values[i - 1]));
    double sum = 0.0;
    for (double d : diffs) sum += d;
    stats.mean = sum / static_cast<double>(diffs.size());
    double sq = 0.0;
    for (double d : diffs) sq += (d - stats.mean) * (d - stats.mean);
    stats.variance = sq / static_cast<double>(diffs.size());
    stats.count = diffs.size();
    return stats;
}

// Ceiling discretization of an arithmetic tick sequence keeps the per-tick
// standard deviation at or below one half.
constexpr double kDiscretizationSdFloor = 0.55;

void check_coordinated(const TickStats& stats, double tolerance, const char* which) {
    const double sd = std::sqrt(stats.variance);
    const double allowed = std::max(kDiscretizationSdFloor, tolerance * std::abs(stats.mean));
    if (sd > allowed)
        throw NotCoordinatedError(std::string("per-tick ") + which +
                                  " projections are not constant within tolerance");
}

}  // namespace

FrameRelation measure_frame_relation(const CausalSet& cs, const Frame& reference,
                                     const Frame& moving, double tolerance) {
    // Successive ticks of the observed frame's first chain, quantified in the
    // reference frame. Only the prefix with projections on both chains is
    // usable; projection absence is monotone along the chain.
    const ObserverChain& ticks = moving.p_chain();
    std::vector<long long> p_values, q_values;
    for (std::size_t i = 0; i < ticks.size(); ++i) {
        auto p = project(cs, ticks.event_at(i), reference.p_chain());
        auto q = project(cs, ticks.event_at(i), reference.q_chain());
        if (!p || !q) break;
        p_values.push_back(*p);
        q_values.push_back(*q);
    }
    if (p_values.size() < 2)
        throw NoProjectionError("need at least two ticks projecting onto both chains");

    TickStats mp = diff_stats(p_values);
    TickStats nq = diff_stats(q_values);
    check_coordinated(mp, tolerance, "p");
    check_coordinated(nq, tolerance, "q");

    FrameRelation r;
    r.m = mp.mean;
    r.n = nq.mean;
    r.m_variance = mp.variance;
    r.n_variance = nq.variance;
    r.rho = rho_from_mn(r.m, r.n);
    r.beta = beta_from_mn(r.m, r.n);
    return r;
}

}  // namespace causetq

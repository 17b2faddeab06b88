#include "causetq/quantify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace causetq {

ObserverChain::ObserverChain(const CausalSet& cs, std::vector<EventId> events,
                             std::vector<long long> valuations)
    : events_(std::move(events)), valuations_(std::move(valuations)) {
    if (events_.empty()) throw EmptyChainError("observer chain has no quantifying events");
    if (events_.size() != valuations_.size())
        throw ChainError("events and valuations differ in length");
    for (std::size_t i = 0; i + 1 < events_.size(); ++i) {
        if (!cs.less(events_[i], events_[i + 1]))
            throw ChainError("quantifying events are not in ascending causal order");
        if (valuations_[i + 1] != valuations_[i] + 1)
            throw ChainError("valuations must increase by exactly 1 between successive events");
    }
}

ObserverChain ObserverChain::trusted(std::vector<EventId> events,
                                     std::vector<long long> valuations) {
    ObserverChain c;
    c.events_ = std::move(events);
    c.valuations_ = std::move(valuations);
    return c;
}

std::optional<long long> project(const CausalSet& cs, EventId x, const ObserverChain& chain) {
    // The predicate x <= chain[i] is monotone along the chain, so the least
    // including event is found by binary search.
    const auto& events = chain.events();
    std::size_t lo = 0, hi = events.size();
    while (lo < hi) {
        std::size_t mid = lo + (hi - lo) / 2;
        if (cs.leq(x, events[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    if (lo == events.size()) return std::nullopt;
    return chain.valuation_at(lo);
}

namespace {

// Projections of `from`'s successive quantifying events onto `onto` must step
// by exactly one. Missing projections form a suffix of the chain and are
// skipped. Returns the index of the later event of the first violating pair.
std::optional<std::size_t> first_step_violation(const CausalSet& cs,
                                                const ObserverChain& from,
                                                const ObserverChain& onto) {
    std::optional<long long> prev = project(cs, from.event_at(0), onto);
    for (std::size_t i = 1; i < from.size(); ++i) {
        std::optional<long long> cur = project(cs, from.event_at(i), onto);
        if (prev && cur && *cur != *prev + 1) return i;
        prev = cur;
    }
    return std::nullopt;
}

}  // namespace

SyncReport check_synchronized(const CausalSet& cs, const ObserverChain& P,
                              const ObserverChain& Q) {
    if (P.size() == 0 || Q.size() == 0) throw EmptyChainError("empty observer chain");
    SyncReport report;
    auto vp = first_step_violation(cs, P, Q);
    auto vq = first_step_violation(cs, Q, P);
    if (vp || vq) {
        report.ok = false;
        if (vp && vq)
            report.first_violation = std::min(*vp, *vq);
        else
            report.first_violation = vp ? *vp : *vq;
    }
    return report;
}

Frame Frame::make(const CausalSet& cs, ObserverChain P, ObserverChain Q) {
    SyncReport report = check_synchronized(cs, P, Q);
    if (!report.ok)
        throw SyncError("chains are not synchronized", report.first_violation.value_or(0));
    return Frame(std::move(P), std::move(Q));
}

std::optional<ProjectionPair> quantify_event(const CausalSet& cs, EventId x, const Frame& f) {
    auto p = project(cs, x, f.p_chain());
    if (!p) return std::nullopt;
    auto q = project(cs, x, f.q_chain());
    if (!q) return std::nullopt;
    return ProjectionPair{static_cast<double>(*p), static_cast<double>(*q)};
}

ProjectionPair interval_pair(const ProjectionPair& a, const ProjectionPair& b) {
    return {b.p - a.p, b.q - a.q};
}

Decomposition decompose(const ProjectionPair& pair) {
    const double s = (pair.p + pair.q) / 2.0;
    const double d = (pair.p - pair.q) / 2.0;
    return {ProjectionPair{s, s}, ProjectionPair{d, -d}};
}

double interval_scalar(const ProjectionPair& pair) { return pair.p * pair.q; }

double symmetric_scalar(const ProjectionPair& pair) { return pair.p + pair.q; }

Coordinates coordinates(const ProjectionPair& pair) {
    return {(pair.p + pair.q) / 2.0, (pair.p - pair.q) / 2.0};
}

ProjectionPair pair_from_coordinates(const Coordinates& c) {
    return {c.t + c.x, c.t - c.x};
}

IntervalClass classify(const ProjectionPair& pair) {
    if (pair.p == 0.0 || pair.q == 0.0) return IntervalClass::Lightlike;
    const bool same_sign = (pair.p > 0.0) == (pair.q > 0.0);
    return same_sign ? IntervalClass::Timelike : IntervalClass::Spacelike;
}

const char* to_string(IntervalClass c) {
    switch (c) {
        case IntervalClass::Timelike: return "timelike";
        case IntervalClass::Lightlike: return "lightlike";
        case IntervalClass::Spacelike: return "spacelike";
    }
    return "?";
}

namespace {

bool scalars_agree(double a, double b, double tolerance) {
    return std::abs(a - b) <= tolerance * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

CrossValidation cross_validate(const CausalSet& cs, EventId a, EventId b,
                               std::span<const Frame> frames, double tolerance) {
    CrossValidation result;
    result.frames.reserve(frames.size());
    for (const Frame& f : frames) {
        FrameObservation obs;
        auto pa = quantify_event(cs, a, f);
        auto pb = quantify_event(cs, b, f);
        if (!pa || !pb) {
            obs.missing = !pa ? "event a has no projection" : "event b has no projection";
        } else {
            obs.quantified = true;
            obs.pair = interval_pair(*pa, *pb);
            // A frame that records the pair in reverse time order still views
            // the same interval; orient by the sign of the symmetric part.
            obs.oriented_pair = symmetric_scalar(obs.pair) < 0.0
                                    ? ProjectionPair{-obs.pair.p, -obs.pair.q}
                                    : obs.pair;
            obs.scalar = interval_scalar(obs.pair);
            obs.coords = coordinates(obs.pair);
            obs.bounding = obs.pair.p * obs.pair.q < 0.0;
        }
        result.frames.push_back(obs);
    }

    // Consensus across all quantified frames.
    for (std::size_t i = 0; i < result.frames.size(); ++i)
        for (std::size_t j = i + 1; j < result.frames.size(); ++j) {
            if (!result.frames[i].quantified || !result.frames[j].quantified) continue;
            if (!scalars_agree(result.frames[i].scalar, result.frames[j].scalar, tolerance))
                result.consensus = false;
        }

    // Frames whose pairs have opposite-sign components bound the interval;
    // any frame whose scalar deviates from their consensus is flagged.
    double bounding_scalar = 0.0;
    std::size_t bounding_count = 0;
    for (const auto& obs : result.frames)
        if (obs.quantified && obs.bounding) {
            bounding_scalar += obs.scalar;
            ++bounding_count;
        }
    if (bounding_count > 0) {
        bounding_scalar /= static_cast<double>(bounding_count);
        for (auto& obs : result.frames)
            if (obs.quantified && !obs.bounding &&
                !scalars_agree(obs.scalar, bounding_scalar, tolerance))
                obs.non_bounding = true;
    }
    return result;
}

namespace {

struct Candidate {
    std::string name;
    std::function<double(double, double)> f;
};

bool passes_decomposition(const Candidate& c,
                          std::span<const std::pair<double, double>> samples,
                          double tolerance) {
    for (const auto& [a, b] : samples) {
        const double s = (a + b) / 2.0;
        const double d = (a - b) / 2.0;
        const double lhs = c.f(a, b);
        const double rhs = c.f(s, s) + c.f(d, -d);
        if (std::abs(lhs - rhs) > tolerance * std::max(1.0, std::abs(lhs))) return false;
    }
    return true;
}

// g(f(a,b)) = g(a) + g(b) must hold over the whole sample for a single g.
bool g_identity_consistent(const Candidate& c,
                           std::span<const std::pair<double, double>> samples,
                           double tolerance,
                           std::optional<std::array<double, 3>>* witness) {
    for (const auto& [a, b] : samples) {
        const double fab = c.f(a, b);
        if (std::abs(fab - (a + b)) > tolerance * std::max(1.0, std::abs(fab))) {
            if (witness && !*witness) *witness = std::array<double, 3>{a, b, fab};
            return false;
        }
    }
    return true;
}

bool g_log_abs_consistent(const Candidate& c,
                          std::span<const std::pair<double, double>> samples,
                          double tolerance,
                          std::optional<std::array<double, 3>>* witness) {
    for (const auto& [a, b] : samples) {
        const double fab = c.f(a, b);
        bool ok = fab != 0.0 &&
                  std::abs(std::log(std::abs(fab)) - std::log(std::abs(a)) -
                           std::log(std::abs(b))) <= tolerance;
        if (!ok) {
            if (witness && !*witness) *witness = std::array<double, 3>{a, b, fab};
            return false;
        }
    }
    return true;
}

}  // namespace

std::vector<CandidateAudit> audit_scalar_candidates(
    std::span<const std::pair<double, double>> samples, double tolerance) {
    if (samples.empty()) throw DegenerateSamplesError("no samples");
    for (const auto& [a, b] : samples) {
        if (a == 0.0 || b == 0.0 || a + b == 0.0 || a - b == 0.0)
            throw DegenerateSamplesError("samples must have a, b, a+b, a-b all nonzero");
    }

    const std::vector<Candidate> candidates = {
        {"F1", [](double a, double) { return a; }},
        {"F2", [](double, double b) { return b; }},
        {"F3", [](double a, double b) { return a * b; }},
        {"F4(n=1)", [](double a, double b) { return a + b; }},
        {"F4(n=3)", [](double a, double b) { return std::pow(a + b, 3); }},
        {"F4(n=5)", [](double a, double b) { return std::pow(a + b, 5); }},
        {"F5", [](double a, double b) { return a * a + b * b; }},
    };

    std::vector<CandidateAudit> table;
    table.reserve(candidates.size());
    for (const auto& c : candidates) {
        CandidateAudit row;
        row.candidate = c.name;
        row.passes_decomposition = passes_decomposition(c, samples, tolerance);
        std::optional<std::array<double, 3>> w_id, w_log;
        const bool id_ok = g_identity_consistent(c, samples, tolerance, &w_id);
        const bool log_ok = g_log_abs_consistent(c, samples, tolerance, &w_log);
        row.passes_associativity = id_ok || log_ok;
        if (!row.passes_associativity) row.counterexample = w_id ? w_id : w_log;
        table.push_back(std::move(row));
    }
    return table;
}

}  // namespace causetq

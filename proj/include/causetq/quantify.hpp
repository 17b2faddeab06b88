#ifndef CAUSETQ_QUANTIFY_HPP
#define CAUSETQ_QUANTIFY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "causetq/causal_set.hpp"

namespace causetq {

/// An event quantified by its projections onto the two chains of a frame.
struct ProjectionPair {
    double p = 0.0;
    double q = 0.0;
    friend bool operator==(const ProjectionPair&, const ProjectionPair&) = default;
};

/// Emergent (t, x): half the sum and half the difference of a pair.
struct Coordinates {
    double t = 0.0;
    double x = 0.0;
    friend bool operator==(const Coordinates&, const Coordinates&) = default;
};

enum class IntervalClass { Timelike, Lightlike, Spacelike };

/**
 * A chain of quantifying events with integer valuations. Valuations step by
 * exactly one between successive quantifying events, and the events must be
 * listed in ascending causal order.
 */
class ObserverChain {
public:
    ObserverChain(const CausalSet& cs, std::vector<EventId> events,
                  std::vector<long long> valuations);

    std::size_t size() const { return events_.size(); }
    const std::vector<EventId>& events() const { return events_; }
    const std::vector<long long>& valuations() const { return valuations_; }
    EventId event_at(std::size_t i) const { return events_[i]; }
    long long valuation_at(std::size_t i) const { return valuations_[i]; }

    /// Constructs without poset validation; for generators whose geometry
    /// already guarantees the chain invariants.
    static ObserverChain trusted(std::vector<EventId> events,
                                 std::vector<long long> valuations);

private:
    ObserverChain() = default;
    std::vector<EventId> events_;
    std::vector<long long> valuations_;
};

/// Valuation of the least quantifying event p on the chain with x <= p;
/// nullopt when no chain event includes x.
std::optional<long long> project(const CausalSet& cs, EventId x, const ObserverChain& chain);

struct SyncReport {
    bool ok = true;
    std::optional<std::size_t> first_violation;
};

/// Checks that successive quantifying events of each chain project to
/// valuations stepping by exactly one on the other, over all events whose
/// projections exist. A constant offset between the label sequences is
/// allowed.
SyncReport check_synchronized(const CausalSet& cs, const ObserverChain& P,
                              const ObserverChain& Q);

/// A synchronized pair of observer chains.
class Frame {
public:
    static Frame make(const CausalSet& cs, ObserverChain P, ObserverChain Q);
    const ObserverChain& p_chain() const { return p_; }
    const ObserverChain& q_chain() const { return q_; }

private:
    Frame(ObserverChain P, ObserverChain Q) : p_(std::move(P)), q_(std::move(Q)) {}
    ObserverChain p_;
    ObserverChain q_;
};

/// (projection onto P, projection onto Q); nullopt if either is absent.
std::optional<ProjectionPair> quantify_event(const CausalSet& cs, EventId x, const Frame& f);

/// Componentwise difference b - a.
ProjectionPair interval_pair(const ProjectionPair& a, const ProjectionPair& b);

struct Decomposition {
    ProjectionPair symmetric;      // ((p+q)/2, (p+q)/2), chain-like
    ProjectionPair antisymmetric;  // ((p-q)/2, (q-p)/2), antichain-like
};

Decomposition decompose(const ProjectionPair& pair);

/// p * q. Equals t^2 - x^2 in coordinate form.
double interval_scalar(const ProjectionPair& pair);

/// p + q. Twice the time coordinate.
double symmetric_scalar(const ProjectionPair& pair);

Coordinates coordinates(const ProjectionPair& pair);

/// Inverse of `coordinates`: (t + x, t - x).
ProjectionPair pair_from_coordinates(const Coordinates& c);

IntervalClass classify(const ProjectionPair& pair);

const char* to_string(IntervalClass c);

/// Per-frame result of quantifying one event pair.
struct FrameObservation {
    bool quantified = false;
    std::string missing;           // which projection was absent
    ProjectionPair pair{};         // raw interval pair, fixed event order
    ProjectionPair oriented_pair{};// flipped when the frame records the
                                   // events in reverse time order
    double scalar = 0.0;
    Coordinates coords{};
    bool bounding = false;         // pair components have opposite signs
    bool non_bounding = false;     // scalar deviates from bounding consensus
};

struct CrossValidation {
    std::vector<FrameObservation> frames;
    bool consensus = true;  // all quantified frames agree on the scalar
};

/// Quantifies (a, b) in every frame and compares interval scalars. Frames in
/// which a projection is absent are reported, not fatal. Tolerance 0 demands
/// exact agreement (integer valuations); pass a relative tolerance for
/// real-valued quantifications.
CrossValidation cross_validate(const CausalSet& cs, EventId a, EventId b,
                               std::span<const Frame> frames, double tolerance = 0.0);

/// One row of the scalar-candidate audit.
struct CandidateAudit {
    std::string candidate;
    bool passes_decomposition = false;
    bool passes_associativity = false;
    /// (a, b, f(a,b)) witnessing the associativity failure, when it fails.
    std::optional<std::array<double, 3>> counterexample;
};

/**
 * Numerically audits the candidate scalar maps a, b, ab, (a+b)^n for
 * n in {1,3,5}, and a^2+b^2 against two filters: additivity under the
 * symmetric/antisymmetric decomposition, and existence of a consistent
 * rescaling g with g(f(a,b)) = g(a) + g(b) over the sample, with g drawn
 * from {identity, log-of-absolute-value}. Exactly a+b and ab pass both.
 */
std::vector<CandidateAudit> audit_scalar_candidates(
    std::span<const std::pair<double, double>> samples, double tolerance = 1e-9);

}  // namespace causetq

#endif

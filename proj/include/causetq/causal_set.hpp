#ifndef CAUSETQ_CAUSAL_SET_HPP
#define CAUSETQ_CAUSAL_SET_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "causetq/bit_matrix.hpp"
#include "causetq/errors.hpp"

namespace causetq {

/// Event index, dense in [0, N) for a set of N events.
using EventId = std::uint32_t;

using IdPair = std::pair<EventId, EventId>;

/// Outcome of comparing two events under the causal order.
enum class Order { Before, After, Equal, Incomparable };

/**
 * A finite set of events with an acyclic order relation. The canonical
 * representation is the covering relation (transitive reduction) plus a dense
 * reachability matrix, so order queries are O(1). Immutable after
 * construction; concurrent reads are safe.
 */
class CausalSet {
public:
    /// Builds from an arbitrary set of related pairs (a, b) meaning a <= b.
    /// Redundant and transitive pairs are allowed and normalized away.
    /// Throws CycleError if the pairs admit a directed cycle, IdRangeError on
    /// an id outside [0, event_count).
    static CausalSet build(std::uint32_t event_count, std::span<const IdPair> relations);

    /// Builds from an already transitively closed strict-successor matrix.
    /// `topo` must be a linear extension of the order. Trusted input used by
    /// generators that know their relation is a closure (e.g. light cones).
    static CausalSet from_closure(BitMatrix closure, std::vector<EventId> topo);

    std::uint32_t size() const { return static_cast<std::uint32_t>(succ_.size()); }

    /// a <= b (reflexive).
    bool leq(EventId a, EventId b) const {
        check_id(a);
        check_id(b);
        return a == b || succ_.test(a, b);
    }

    /// Strict a < b.
    bool less(EventId a, EventId b) const {
        check_id(a);
        check_id(b);
        return succ_.test(a, b);
    }

    Order relation(EventId a, EventId b) const;

    /// True iff every pair of members is comparable.
    bool is_chain(std::span<const EventId> members) const;

    /// True iff every pair of distinct members is incomparable.
    bool is_antichain(std::span<const EventId> members) const;

    /// Covering relation (transitive reduction), lexicographically sorted.
    const std::vector<IdPair>& covers() const { return covers_; }

    /// Position of an event in a fixed linear extension of the order.
    std::uint32_t topo_rank(EventId e) const {
        check_id(e);
        return rank_[e];
    }

    const BitMatrix& closure_matrix() const { return succ_; }

private:
    CausalSet(BitMatrix succ, std::vector<EventId> topo);

    void check_id(EventId e) const {
        if (e >= succ_.size()) throw IdRangeError("event id out of range");
    }
    void check_members(std::span<const EventId> members) const;
    void compute_covers();

    BitMatrix succ_;                   // strict reachability: (a,b) set iff a < b
    std::vector<EventId> topo_;        // linear extension, topo_[rank] = id
    std::vector<std::uint32_t> rank_;  // inverse of topo_
    std::vector<IdPair> covers_;
};

}  // namespace causetq

#endif

#include "causetq/causal_set.hpp"

#include <algorithm>
#include <cstring>

namespace causetq {

CausalSet CausalSet::build(std::uint32_t event_count, std::span<const IdPair> relations) {
    const std::size_t n = event_count;
    std::vector<std::vector<EventId>> adj(n);
    std::vector<std::uint32_t> indegree(n, 0);

    for (const auto& [a, b] : relations) {
        if (a >= n || b >= n) throw IdRangeError("relation references id out of range");
        if (a == b) continue;  // a <= a carries no information
        adj[a].push_back(b);
    }
    for (auto& out : adj) {
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        for (EventId b : out) ++indegree[b];
    }

    // Kahn topological sort; leftovers mean a directed cycle.
    std::vector<EventId> topo;
    topo.reserve(n);
    std::vector<EventId> frontier;
    for (std::uint32_t i = 0; i < n; ++i)
        if (indegree[i] == 0) frontier.push_back(i);
    while (!frontier.empty()) {
        EventId u = frontier.back();
        frontier.pop_back();
        topo.push_back(u);
        for (EventId v : adj[u])
            if (--indegree[v] == 0) frontier.push_back(v);
    }
    if (topo.size() != n) throw CycleError("order relation contains a directed cycle");

    // Strict reachability: in reverse topological order, a node's successor
    // set is the union of each out-neighbor and that neighbor's successors.
    BitMatrix succ(n);
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        EventId u = *it;
        for (EventId v : adj[u]) {
            succ.set(u, v);
            succ.or_row(u, v);
        }
    }
    return CausalSet(std::move(succ), std::move(topo));
}

CausalSet CausalSet::from_closure(BitMatrix closure, std::vector<EventId> topo) {
    return CausalSet(std::move(closure), std::move(topo));
}

CausalSet::CausalSet(BitMatrix succ, std::vector<EventId> topo)
    : succ_(std::move(succ)), topo_(std::move(topo)), rank_(succ_.size()) {
    for (std::uint32_t r = 0; r < topo_.size(); ++r) rank_[topo_[r]] = r;
    compute_covers();
}

void CausalSet::compute_covers() {
    // b covers a iff a < b and no c satisfies a < c < b. Scanning a's
    // successors in topological order, b is a cover exactly when it is not
    // already reachable through a previously accepted cover.
    const std::size_t n = succ_.size();
    const std::size_t words = succ_.words_per_row();
    std::vector<std::uint64_t> covered(words);
    for (std::uint32_t rank_a = 0; rank_a < n; ++rank_a) {
        EventId a = topo_[rank_a];
        std::memset(covered.data(), 0, words * sizeof(std::uint64_t));
        const std::uint64_t* row_a = succ_.row(a);
        for (std::uint32_t rank_b = rank_a + 1; rank_b < n; ++rank_b) {
            EventId b = topo_[rank_b];
            if (!((row_a[b / 64] >> (b % 64)) & 1u)) continue;
            if ((covered[b / 64] >> (b % 64)) & 1u) continue;
            covers_.emplace_back(a, b);
            const std::uint64_t* row_b = succ_.row(b);
            for (std::size_t w = 0; w < words; ++w) covered[w] |= row_b[w];
        }
    }
    std::sort(covers_.begin(), covers_.end());
}

Order CausalSet::relation(EventId a, EventId b) const {
    check_id(a);
    check_id(b);
    if (a == b) return Order::Equal;
    if (succ_.test(a, b)) return Order::Before;
    if (succ_.test(b, a)) return Order::After;
    return Order::Incomparable;
}

void CausalSet::check_members(std::span<const EventId> members) const {
    for (EventId e : members) check_id(e);
    std::vector<EventId> sorted(members.begin(), members.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("event subset contains duplicate ids");
}

bool CausalSet::is_chain(std::span<const EventId> members) const {
    check_members(members);
    if (members.size() <= 1) return true;
    // Sorted by topo rank, comparability of consecutive members implies
    // comparability of all pairs by transitivity.
    std::vector<EventId> sorted(members.begin(), members.end());
    std::sort(sorted.begin(), sorted.end(),
              [&](EventId x, EventId y) { return rank_[x] < rank_[y]; });
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
        if (!succ_.test(sorted[i], sorted[i + 1])) return false;
    return true;
}

bool CausalSet::is_antichain(std::span<const EventId> members) const {
    check_members(members);
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            if (succ_.test(members[i], members[j]) || succ_.test(members[j], members[i]))
                return false;
        }
    return true;
}

}  // namespace causetq

#ifndef CAUSETQ_IO_HPP
#define CAUSETQ_IO_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "causetq/frames.hpp"
#include "causetq/oracle.hpp"
#include "causetq/quantify.hpp"

namespace causetq {

struct LoadedCauset {
    CausalSet causet;
    int embedding_dimension = 0;  // 0 when no embedding is present
    std::vector<MinkowskiPoint> embedding;
};

/// Causal-set file: {"event_count": N, "relations": [[a,b],...]} with [a,b]
/// meaning a <= b, plus an optional "embedding": [[t,x(,y)],...]. The loader
/// rejects cycles and out-of-range ids.
LoadedCauset load_causet_json(const std::filesystem::path& path);

void save_causet_json(const std::filesystem::path& path, const CausalSet& cs);
void save_causet_json(const std::filesystem::path& path, const EmbeddedCauset& ec);

/// Chain file: {"events": [ids...], "valuations": [ints...]}.
ObserverChain load_chain_json(const std::filesystem::path& path, const CausalSet& cs);
void save_chain_json(const std::filesystem::path& path, const ObserverChain& chain);

/// Frame file: {"P": chain, "Q": chain}. Loading validates synchronization.
Frame load_frame_json(const std::filesystem::path& path, const CausalSet& cs);
void save_frame_json(const std::filesystem::path& path, const ObserverChain& P,
                     const ObserverChain& Q);

struct QuantRow {
    EventId event_id = 0;
    ProjectionPair pair;
    Coordinates coords;
    double scalar = 0.0;
    IntervalClass cls = IntervalClass::Lightlike;
};

/// CSV columns: event_id, p, q, t, x, scalar, class.
void write_quantify_csv(const std::filesystem::path& path,
                        const std::vector<QuantRow>& rows);

/// Shortest round-trip decimal representation.
std::string format_double(double value);

std::string frame_relation_json(const FrameRelation& r);

}  // namespace causetq

#endif

#ifndef CAUSETQ_ERRORS_HPP
#define CAUSETQ_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace causetq {

/// Input order relation contains a directed cycle.
struct CycleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Event id outside [0, event_count).
struct IdRangeError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// Chain construction violated an invariant (not a chain, bad valuation step).
struct ChainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct EmptyChainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Two chains fail the synchronization requirement; carries the first
/// offending quantifying-event index.
struct SyncError : std::runtime_error {
    std::size_t violation_index;
    SyncError(const std::string& what, std::size_t index)
        : std::runtime_error(what), violation_index(index) {}
};

/// Per-tick projections of a chain onto a reference frame are not constant
/// enough to define a single (m, n) relation.
struct NotCoordinatedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Not enough usable tick projections to measure a frame relation.
struct NoProjectionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonPositiveProjectionError : std::domain_error {
    using std::domain_error::domain_error;
};

struct NonPositiveRhoError : std::domain_error {
    using std::domain_error::domain_error;
};

struct SpeedRangeError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Events handed to the orthogonal-decomposition check do not share a time
/// coordinate within tolerance.
struct NotEqualTimeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An event required by a verification could not be quantified in its frame.
struct UnquantifiableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateSamplesError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Sprinkling region has zero or negative volume, or the config is unusable.
struct RegionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct WorldlineRegionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Event is not below any tick of a chain it must project to.
struct CoverageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace causetq

#endif

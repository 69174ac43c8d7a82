#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "inthull/ddm.hpp"
#include "inthull/gomory.hpp"

namespace inthull {

enum class HullStatus { Ok, EmptyHull };

struct RunStats
{
    std::size_t iterations = 0;
    std::size_t cuts_added = 0;
    BigInteger max_delta = 0;
    BigInteger sum_delta = 0;
    std::chrono::duration<double> wall_time{0};
};

struct HullResult
{
    std::vector<IntVector> vertices;   // lexicographically sorted
    std::vector<Inequality> facets;    // sorted; affine hull equations appear as row pairs
    HullStatus status = HullStatus::Ok;
    RunStats stats;
};

/** The iteration cap was hit before every vertex became integral. */
class IterationLimitError : public Error
{
public:
    IterationLimitError(const std::string& what, RunStats stats)
        : Error(what), stats_(std::move(stats))
    {
    }
    const RunStats& stats() const { return stats_; }

private:
    RunStats stats_;
};

/** Snapshot handed to HullConfig::on_iteration before the cuts are inserted. */
struct IterationEvent
{
    std::size_t iteration;
    const DDPair& before;
    const Vertex& vertex;
    const VertexBasis& basis;
    const CutSet& cuts;
};

struct HullConfig
{
    std::size_t max_iterations = 100000;
    /** Cuts inserted per iteration; the rest wait in a queue. Unlimited when unset. */
    std::optional<std::size_t> cuts_per_iteration;
    CutOptions cuts;
    Deadline deadline;
    std::function<void(const IterationEvent&)> on_iteration;
};

struct NaiveConfig
{
    BigInteger max_box_volume = kDefaultMaxBoxVolume;
    Deadline deadline;
};

struct VertexChoice
{
    Vertex vertex;
    VertexBasis basis;
};

/** Fill in the basis determinant of every non-integer vertex that lacks one. */
void cache_basis_deltas(DDPair& dd);

/**
 * Non-integer vertex with the smallest basis determinant, ties broken by the
 * lexicographically smallest coordinates; nullopt when all vertices are integral.
 * Throws UnboundedError if the pair has rays or lines.
 */
std::optional<VertexChoice> choose_vertex(const DDPair& dd);

/**
 * Vertices and facets of the integer hull by repeatedly cutting off a
 * non-integer vertex with its Gomory cuts and updating the DD pair.
 * Throws UnboundedError for unbounded input and IterationLimitError when the
 * cap is reached.
 */
HullResult integer_hull(const HPolyhedron& h, const HullConfig& config = {});

/**
 * Baseline: enumerate every lattice point of H, then take their convex hull by
 * DD on the cone of valid inequalities.
 */
HullResult naive_hull(const HPolyhedron& h, const NaiveConfig& config = {});

}  // namespace inthull

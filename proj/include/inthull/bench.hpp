#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "inthull/integer_hull.hpp"

namespace inthull {

/**
 * Random instance generator and benchmark harness.
 *
 * Instances are a_1 x_1 + ... + a_d x_d <= k^2, x_j >= 0 with each a_j drawn
 * uniformly from the integers in [ceil(2k/3), k].
 *
 * Randomness: std::mt19937_64 seeded with the instance seed (its output sequence
 * is fixed by the C++ standard). A value in [lo, hi] is drawn as lo + x mod n,
 * n = hi - lo + 1, redrawing x while x >= 2^64 - (2^64 mod n).
 */
struct InstanceParams
{
    std::size_t d = 0;
    long k = 0;
    std::uint64_t seed = 0;
    IntVector a;
    BigInteger alpha;  // max_j a_j
};

struct Instance
{
    HPolyhedron h;
    InstanceParams params;
};

Instance gen_instance(std::size_t d, long k, std::uint64_t seed);

class InstanceRng
{
public:
    explicit InstanceRng(std::uint64_t seed) : engine_(seed) {}

    /** Uniform integer in [lo, hi], lo <= hi. */
    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);

private:
    std::mt19937_64 engine_;
};

/** k_i = k_min (k_max / k_min)^(i / (points - 1)) rounded to the nearest integer. */
std::vector<long> k_grid(double k_min = 10, double k_max = 1000, std::size_t points = 31);

enum class Method { DdmCuts, Naive };
enum class RecordStatus { Ok, Timeout, Resource };

std::string to_string(Method m);
std::optional<Method> parse_method(const std::string& s);
std::string to_string(RecordStatus s);

struct BenchRecord
{
    Method method = Method::DdmCuts;
    std::size_t d = 0;
    long k = 0;
    std::uint64_t seed = 0;
    BigInteger alpha;
    double time_ms = 0;
    RecordStatus status = RecordStatus::Ok;
    // Present only for completed runs; the cut statistics only for ddm_cuts.
    std::optional<std::size_t> n_vertices;
    std::optional<std::size_t> n_facets;
    std::optional<BigInteger> max_delta;
    std::optional<BigInteger> sum_delta;
    std::optional<std::size_t> iterations;
    std::optional<std::size_t> cuts;
};

inline constexpr int kCsvSchemaVersion = 1;
inline constexpr const char* kCsvHeader =
    "method,d,k,alpha,time_ms,n_vertices,n_facets,max_delta,sum_delta,iterations,cuts,status";

struct BenchOptions
{
    std::vector<std::size_t> dims{3, 4};
    std::vector<long> ks = k_grid();
    std::size_t seeds = 1;
    double timeout_s = 600;
    std::vector<Method> methods{Method::DdmCuts, Method::Naive};
    std::size_t jobs = 1;
};

/** One method on one instance under a wall-clock limit; never throws for timeouts or limits. */
BenchRecord run_method(Method method, const Instance& instance, double timeout_s);

/** Records in (d, k, seed, method) order regardless of how the work was scheduled. */
std::vector<BenchRecord> run_bench(const BenchOptions& options);

void write_csv_header(std::ostream& out);
void write_csv_record(std::ostream& out, const BenchRecord& r);
void write_csv(std::ostream& out, const std::vector<BenchRecord>& records);

}  // namespace inthull

#include "inthull/bench.hpp"

#include <atomic>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <thread>

namespace inthull {

std::uint64_t InstanceRng::uniform(std::uint64_t lo, std::uint64_t hi)
{
    const std::uint64_t n = hi - lo + 1;
    if (n == 0)  // full 64-bit range
        return engine_();
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    // Largest multiple of n that fits, expressed as an exclusive bound on x.
    const std::uint64_t rem = (max % n + 1) % n;
    const std::uint64_t limit = max - rem;  // accept x <= limit
    std::uint64_t x;
    do {
        x = engine_();
    } while (x > limit);
    return lo + x % n;
}

Instance gen_instance(std::size_t d, long k, std::uint64_t seed)
{
    if (d < 1)
        throw PreconditionError("instance dimension must be >= 1");
    if (k < 2)
        throw PreconditionError("instance scale k must be >= 2");
    const auto lo = static_cast<std::uint64_t>((2 * k + 2) / 3);  // ceil(2k/3)
    const auto hi = static_cast<std::uint64_t>(k);

    InstanceRng rng(seed);
    InstanceParams params{d, k, seed, IntVector(d), 0};
    for (std::size_t j = 0; j < d; ++j) {
        params.a[j] = static_cast<unsigned long>(rng.uniform(lo, hi));
        if (params.a[j] > params.alpha)
            params.alpha = params.a[j];
    }

    HPolyhedron h(d);
    h.add(params.a, BigInteger(k) * k);
    for (std::size_t j = 0; j < d; ++j) {
        IntVector e(d);
        e[j] = -1;
        h.add(e, 0);
    }
    return Instance{std::move(h), std::move(params)};
}

std::vector<long> k_grid(double k_min, double k_max, std::size_t points)
{
    if (!(k_min > 0) || points < 2)
        throw PreconditionError("k grid needs k_min > 0 and at least two points");
    std::vector<long> ks;
    ks.reserve(points);
    const double ratio = k_max / k_min;
    for (std::size_t i = 0; i < points; ++i) {
        const double e = static_cast<double>(i) / static_cast<double>(points - 1);
        ks.push_back(std::lround(k_min * std::pow(ratio, e)));
    }
    return ks;
}

std::string to_string(Method m)
{
    return m == Method::DdmCuts ? "ddm_cuts" : "naive";
}

std::optional<Method> parse_method(const std::string& s)
{
    if (s == "ddm_cuts")
        return Method::DdmCuts;
    if (s == "naive")
        return Method::Naive;
    return std::nullopt;
}

std::string to_string(RecordStatus s)
{
    switch (s) {
    case RecordStatus::Ok:
        return "ok";
    case RecordStatus::Timeout:
        return "timeout";
    case RecordStatus::Resource:
        return "resource";
    }
    return "?";
}

BenchRecord run_method(Method method, const Instance& instance, double timeout_s)
{
    BenchRecord rec;
    rec.method = method;
    rec.d = instance.params.d;
    rec.k = instance.params.k;
    rec.seed = instance.params.seed;
    rec.alpha = instance.params.alpha;

    const auto start = std::chrono::steady_clock::now();
    const Deadline deadline = Deadline::after(std::chrono::duration<double>(timeout_s));
    auto elapsed_ms = [&] {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    };
    // Failed runs carry no geometry or cut statistics.
    auto failed = [&](RecordStatus status) {
        BenchRecord f;
        f.method = method;
        f.d = rec.d;
        f.k = rec.k;
        f.seed = rec.seed;
        f.alpha = rec.alpha;
        f.time_ms = elapsed_ms();
        f.status = status;
        return f;
    };
    try {
        HullResult r;
        if (method == Method::DdmCuts) {
            HullConfig cfg;
            cfg.deadline = deadline;
            r = integer_hull(instance.h, cfg);
            rec.max_delta = r.stats.max_delta;
            rec.sum_delta = r.stats.sum_delta;
            rec.iterations = r.stats.iterations;
            rec.cuts = r.stats.cuts_added;
        } else {
            r = naive_hull(instance.h, {.deadline = deadline});
        }
        rec.time_ms = elapsed_ms();
        rec.n_vertices = r.vertices.size();
        rec.n_facets = r.facets.size();
        rec.status = RecordStatus::Ok;
    } catch (const TimeoutError&) {
        rec = failed(RecordStatus::Timeout);
    } catch (const ResourceError&) {
        rec = failed(RecordStatus::Resource);
    } catch (const IterationLimitError&) {
        rec = failed(RecordStatus::Resource);
    }
    return rec;
}

std::vector<BenchRecord> run_bench(const BenchOptions& options)
{
    struct Task
    {
        std::size_t d;
        long k;
        std::uint64_t seed;
        Method method;
    };
    std::vector<Task> tasks;
    for (std::size_t d : options.dims)
        for (long k : options.ks)
            for (std::uint64_t s = 0; s < options.seeds; ++s)
                for (Method m : options.methods)
                    tasks.push_back({d, k, s, m});

    std::vector<BenchRecord> records(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
            const Task& t = tasks[i];
            records[i] = run_method(t.method, gen_instance(t.d, t.k, t.seed), options.timeout_s);
        }
    };
    const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, tasks.size()));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t j = 0; j < jobs; ++j)
            pool.emplace_back(worker);
    }
    return records;
}

void write_csv_header(std::ostream& out)
{
    out << kCsvHeader << '\n';
}

namespace {

template <class T>
void optional_field(std::ostream& out, const std::optional<T>& v)
{
    out << ',';
    if (v)
        out << *v;
}

}  // namespace

void write_csv_record(std::ostream& out, const BenchRecord& r)
{
    out << to_string(r.method) << ',' << r.d << ',' << r.k << ',' << r.alpha << ',' << std::fixed
        << std::setprecision(3) << r.time_ms;
    out.unsetf(std::ios::floatfield);
    optional_field(out, r.n_vertices);
    optional_field(out, r.n_facets);
    optional_field(out, r.max_delta);
    optional_field(out, r.sum_delta);
    optional_field(out, r.iterations);
    optional_field(out, r.cuts);
    out << ',' << to_string(r.status) << '\n';
}

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records)
{
    write_csv_header(out);
    for (const auto& r : records)
        write_csv_record(out, r);
}

}  // namespace inthull

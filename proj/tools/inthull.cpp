// inthull: integer hulls of bounded rational polyhedra from the command line.
//
// Exit codes: 0 ok, 1 empty integer hull / infeasible, 2 parse or usage error,
// 3 resource limit or timeout.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "inthull/bench.hpp"
#include "inthull/integer_hull.hpp"
#include "inthull/io.hpp"

namespace {

using namespace inthull;

constexpr int kExitOk = 0;
constexpr int kExitEmpty = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

void print_hull(std::ostream& out, std::size_t dim, const HullResult& r, bool stats)
{
    if (r.status == HullStatus::EmptyHull) {
        out << "# status empty\n";
    } else {
        out << "# status ok\n# vertices\n";
        write_vrep(out, dim, r.vertices);
        out << "# facets\n";
        write_hrep(out, dim, r.facets);
    }
    if (stats) {
        out << "# iterations " << r.stats.iterations << '\n'
            << "# cuts " << r.stats.cuts_added << '\n'
            << "# max_delta " << r.stats.max_delta << '\n'
            << "# sum_delta " << r.stats.sum_delta << '\n'
            << "# time_ms " << std::fixed << std::setprecision(3)
            << std::chrono::duration<double, std::milli>(r.stats.wall_time).count() << '\n';
    }
}

Deadline deadline_from(double seconds)
{
    return seconds > 0 ? Deadline::after(std::chrono::duration<double>(seconds)) : Deadline{};
}

std::vector<std::string> split_list(const std::string& s)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty())
            out.push_back(item);
    return out;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Vertices and facets of the integer hull of {x : Ax <= b}"};
    app.require_subcommand(1);

    std::string file;
    bool show_stats = false;
    std::size_t max_iter = 100000;
    std::optional<std::size_t> cuts_per_iter;
    bool single_cut = false;
    double timeout = 0;

    auto* hull = app.add_subcommand("hull", "integer hull by Gomory cuts and dynamic DD");
    hull->add_option("FILE", file, "H-representation")->required();
    hull->add_flag("--stats", show_stats, "print run statistics as comment lines");
    hull->add_option("--max-iter", max_iter, "iteration cap");
    hull->add_option("--cuts-per-iter", cuts_per_iter, "cuts inserted per iteration (rest are queued)");
    hull->add_flag("--single-cut", single_cut, "keep only the cut with the smallest right-hand side");
    hull->add_option("--timeout", timeout, "wall-clock limit in seconds");

    auto* vertices = app.add_subcommand("vertices", "vertices (and rays) of the polyhedron itself");
    vertices->add_option("FILE", file, "H-representation")->required();

    auto* facets = app.add_subcommand("facets", "irredundant facets of the polyhedron itself");
    facets->add_option("FILE", file, "H-representation")->required();

    auto* naive = app.add_subcommand("naive", "integer hull by lattice point enumeration");
    naive->add_option("FILE", file, "H-representation")->required();
    naive->add_flag("--stats", show_stats, "print run statistics as comment lines");
    naive->add_option("--timeout", timeout, "wall-clock limit in seconds");

    auto* oracle = app.add_subcommand("oracle", "list every lattice point of the polyhedron");
    oracle->add_option("FILE", file, "H-representation")->required();

    std::size_t gen_dim = 3;
    long gen_k = 10;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    auto* gen = app.add_subcommand("gen", "random instance a . x <= k^2, x >= 0");
    gen->add_option("--dim", gen_dim, "dimension")->required();
    gen->add_option("--k", gen_k, "scale parameter")->required();
    gen->add_option("--seed", gen_seed, "PRNG seed")->required();
    gen->add_option("-o", gen_out, "output file (default stdout)");

    std::string dims_arg = "3,4";
    double k_min = 10, k_max = 1000;
    std::size_t points = 31, seeds = 1, jobs = 1;
    double bench_timeout = 600;
    std::string csv_out;
    std::string methods_arg = "ddm_cuts,naive";
    auto* bench = app.add_subcommand("bench", "timing and size statistics as CSV");
    bench->add_option("--dims", dims_arg, "comma-separated dimensions");
    bench->add_option("--k-min", k_min, "smallest k");
    bench->add_option("--k-max", k_max, "largest k");
    bench->add_option("--points", points, "number of log-spaced k values");
    bench->add_option("--seeds", seeds, "instances per (d, k); seeds 0..N-1");
    bench->add_option("--timeout", bench_timeout, "per-run wall-clock limit in seconds");
    bench->add_option("--csv", csv_out, "output CSV (default stdout)");
    bench->add_option("--methods", methods_arg, "comma-separated: ddm_cuts,naive");
    bench->add_option("--jobs", jobs, "parallel worker slots");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*hull) {
            const HPolyhedron h = read_hrep(file);
            HullConfig cfg;
            cfg.max_iterations = max_iter;
            cfg.cuts_per_iteration = cuts_per_iter;
            cfg.cuts.single_cut = single_cut;
            cfg.deadline = deadline_from(timeout);
            const HullResult r = integer_hull(h, cfg);
            print_hull(std::cout, h.dim(), r, show_stats);
            return r.status == HullStatus::EmptyHull ? kExitEmpty : kExitOk;
        }
        if (*naive) {
            const HPolyhedron h = read_hrep(file);
            const HullResult r = naive_hull(h, {.deadline = deadline_from(timeout)});
            print_hull(std::cout, h.dim(), r, show_stats);
            return r.status == HullStatus::EmptyHull ? kExitEmpty : kExitOk;
        }
        if (*vertices) {
            const HPolyhedron h = read_hrep(file);
            const DDPair dd = build(h);
            if (dd.status == DDStatus::Empty) {
                std::cout << "# status empty\n";
                return kExitEmpty;
            }
            std::vector<RatVector> pts;
            for (const auto& v : dd.vertices)
                pts.push_back(v.coords);
            std::sort(pts.begin(), pts.end());
            write_vrep(std::cout, h.dim(), pts);
            for (const auto& r : dd.rays) {
                std::cout << "# ray";
                for (const auto& x : r.direction)
                    std::cout << ' ' << x;
                std::cout << '\n';
            }
            for (const auto& l : dd.lines) {
                std::cout << "# line";
                for (const auto& x : l)
                    std::cout << ' ' << x;
                std::cout << '\n';
            }
            return kExitOk;
        }
        if (*facets) {
            const HPolyhedron h = read_hrep(file);
            const DDPair dd = build(h);
            if (dd.status == DDStatus::Empty) {
                std::cout << "# status empty\n";
                return kExitEmpty;
            }
            if (!dd.bounded())
                throw UnboundedError("facet listing needs a bounded polyhedron");
            std::vector<Inequality> rows;
            for (std::size_t i : irredundant_facets(dd))
                rows.push_back(h.row(i));
            write_hrep(std::cout, h.dim(), rows);
            return kExitOk;
        }
        if (*oracle) {
            const HPolyhedron h = read_hrep(file);
            const LatticePointSet pts = enumerate_lattice_points(h);
            write_vrep(std::cout, h.dim(), pts.points);
            return pts.points.empty() ? kExitEmpty : kExitOk;
        }
        if (*gen) {
            const Instance inst = gen_instance(gen_dim, gen_k, gen_seed);
            std::ostringstream text;
            text << "# d=" << gen_dim << " k=" << gen_k << " seed=" << gen_seed
                 << " alpha=" << inst.params.alpha << '\n';
            write_hrep(text, inst.h);
            if (gen_out.empty()) {
                std::cout << text.str();
            } else {
                std::ofstream out(gen_out);
                if (!(out << text.str()))
                    throw std::runtime_error("cannot write " + gen_out);
            }
            return kExitOk;
        }
        if (*bench) {
            BenchOptions opt;
            opt.dims.clear();
            for (const auto& s : split_list(dims_arg))
                opt.dims.push_back(std::stoul(s));
            opt.ks = k_grid(k_min, k_max, points);
            opt.seeds = seeds;
            opt.timeout_s = bench_timeout;
            opt.jobs = jobs;
            opt.methods.clear();
            for (const auto& s : split_list(methods_arg)) {
                auto m = parse_method(s);
                if (!m) {
                    std::cerr << "unknown method '" << s << "'\n";
                    return kExitUsage;
                }
                opt.methods.push_back(*m);
            }
            const auto records = run_bench(opt);
            if (csv_out.empty()) {
                write_csv(std::cout, records);
            } else {
                std::ofstream out(csv_out);
                write_csv(out, records);
                if (!out)
                    throw std::runtime_error("cannot write " + csv_out);
            }
            return kExitOk;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UnboundedError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return kExitResource;
    } catch (const TimeoutError& e) {
        std::cerr << "timeout: " << e.what() << '\n';
        return kExitResource;
    } catch (const IterationLimitError& e) {
        std::cerr << "error: " << e.what() << " after " << e.stats().iterations << " iterations\n";
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

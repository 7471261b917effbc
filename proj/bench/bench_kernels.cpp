#include <cmath>
#include <map>

#include <benchmark/benchmark.h>

#include "diskiso/error.hpp"
#include "diskiso/instance_io.hpp"
#include "diskiso/oracle.hpp"
#include "diskiso/recsep.hpp"

using namespace diskiso;

namespace {

const Instance& instance(std::size_t n, std::size_t k) {
    // A handful of fixed instances, built once.
    static std::map<std::pair<std::size_t, std::size_t>, Instance> cache;
    auto it = cache.find({n, k});
    if (it == cache.end()) {
        const double box = 1.3 * std::sqrt(static_cast<double>(n));
        for (std::uint64_t seed = 1;; ++seed) {
            try {
                it = cache.emplace(std::pair{n, k}, generate_random_instance(n, k, box, seed)).first;
                break;
            } catch (const Error&) {
            }
        }
    }
    return it->second;
}

void oracle(benchmark::State& state, Execution execution) {
    const Instance& inst = instance(static_cast<std::size_t>(state.range(0)), 3);
    OracleOptions options;
    options.execution = execution;
    for (auto _ : state) {
        auto r = exact_min_separator(inst.disks, inst.points, options);
        benchmark::DoNotOptimize(r.ids.data());
        state.counters["subsets"] = static_cast<double>(r.subsets_checked);
    }
}

void recsep(benchmark::State& state, Execution execution) {
    const Instance& inst = instance(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
    RecSepOptions options{inst.tol, execution};
    for (auto _ : state) {
        auto r = separate_points(inst.disks, inst.points, options);
        benchmark::DoNotOptimize(r.ids.data());
        state.counters["k"] = static_cast<double>(inst.points.size());
    }
}

}  // namespace

BENCHMARK_CAPTURE(oracle, serial, Execution::Serial)->Arg(10)->Arg(14)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(oracle, parallel, Execution::Parallel)->Arg(10)->Arg(14)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(recsep, serial, Execution::Serial)->Args({20, 4})->Args({40, 8})->Args({60, 10})->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(recsep, parallel, Execution::Parallel)->Args({20, 4})->Args({40, 8})->Args({60, 10})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

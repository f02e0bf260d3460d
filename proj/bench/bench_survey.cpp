// Parallel survey against the single-threaded reference.

#include "gonality/engine.hpp"
#include "gonality/facts.hpp"

#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

using namespace gonality;

namespace {

FactStore const & shipped()
{
    static FactStore const store = [] {
        std::ifstream in(std::string(GONALITY_SOURCE_DIR) + "/data/facts.txt");
        std::ostringstream s;
        s << in.rdbuf();
        return parse_facts(s.str()).store;
    }();
    return store;
}

void BM_survey_serial(benchmark::State & state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(survey_serial(state.range(0), shipped(), true));
}

void BM_survey_parallel(benchmark::State & state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(survey(state.range(0), shipped(), true));
}

} // namespace

BENCHMARK(BM_survey_serial)->Arg(120)->Arg(240)->Arg(420)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_survey_parallel)->Arg(120)->Arg(240)->Arg(420)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <string>

#include "trispec/document.hpp"
#include "trispec/spectrum.hpp"
#include "trispec/suite.hpp"

using namespace trispec;

namespace {

TriringDocument triquaternions(int n) {
  return parse_document(R"({"kind":"triquaternion","base":{"kind":"zn","n":)" + std::to_string(n) + "}}");
}

TriringDocument fixture(const std::string& name) {
  return read_document_file(std::string(TRISPEC_FIXTURE_DIR) + "/" + name + ".triring");
}

void BM_BuildTriquaternions(benchmark::State& state) {
  const TriringDocument doc = triquaternions(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_from_document(doc));
}
BENCHMARK(BM_BuildTriquaternions)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_EnumerateTriideals(benchmark::State& state) {
  const Triring r = build_from_document(triquaternions(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_triideals(r));
}
BENCHMARK(BM_EnumerateTriideals)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_Trispectrum(benchmark::State& state, const std::string& name) {
  const Triring r = build_from_document(fixture(name));
  for (auto _ : state) benchmark::DoNotOptimize(trispectrum(r));
}
BENCHMARK_CAPTURE(BM_Trispectrum, z4z2, std::string("z4z2"));
BENCHMARK_CAPTURE(BM_Trispectrum, z8z4, std::string("z8z4"));
BENCHMARK_CAPTURE(BM_Trispectrum, z2xz3_z3, std::string("z2xz3_z3"));

void BM_VerifyAll(benchmark::State& state, const std::string& name) {
  const TriringDocument doc = fixture(name);
  const SuiteOptions options{Limits{}, static_cast<std::size_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(doc, Suite::all, options));
}
BENCHMARK_CAPTURE(BM_VerifyAll, z4z2, std::string("z4z2"))->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_VerifyAll, triquaternion_z3, std::string("triquaternion_z3"))
    ->Arg(1)
    ->Arg(4)
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

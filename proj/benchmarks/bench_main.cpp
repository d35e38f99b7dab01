#include <benchmark/benchmark.h>

// libbenchmark_main.a on some distributions ships LTO bytecode from another
// compiler version, so the entry point lives here.
BENCHMARK_MAIN();

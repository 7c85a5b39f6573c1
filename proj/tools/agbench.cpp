// Benchmark comparing the serial reference kernels against their
// OpenMP-parallel counterparts: AG-groupoid enumeration and the
// left-invertive law sweep over fuzzy subset triples.

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>

#include "ag/enumerate.hpp"
#include "ag/fuzzy.hpp"
#include "ag/parallel.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_of(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

void report(const char* name, double serial_s, double parallel_s, int jobs) {
  std::cout << std::left << std::setw(28) << name << std::right
            << std::fixed << std::setprecision(3) << std::setw(10) << serial_s
            << " s" << std::setw(10) << parallel_s << " s   x"
            << std::setprecision(2) << (serial_s / parallel_s) << " (" << jobs
            << " jobs)\n";
}

void bench_enumeration(unsigned order) {
  const ag::EnumSpec spec{.order = order};
  const auto t0 = Clock::now();
  const ag::EnumResult serial = ag::enumerate_ag_serial(spec);
  const auto t1 = Clock::now();
  const ag::EnumResult parallel = ag::enumerate_ag(spec, 0);
  const auto t2 = Clock::now();
  if (serial.count_labeled != parallel.count_labeled ||
      serial.tables != parallel.tables) {
    std::cout << "MISMATCH between serial and parallel enumeration\n";
    return;
  }
  std::string name = "enumerate order " + std::to_string(order) + " (" +
                     std::to_string(serial.count_labeled) + ")";
  report(name.c_str(), seconds_of(t0, t1), seconds_of(t1, t2),
         ag::par::effective_jobs(0));
}

// First violation of (f o g) o h = (h o g) o f over all subset triples;
// none exists on an AG-groupoid, so the scan always covers the full space.
std::optional<std::uint64_t> law_sweep(const ag::CayleyTable& t,
                                       ag::GradeChain chain, int jobs) {
  const std::uint64_t m = ag::subset_space_size(t.order(), chain);
  return ag::par::min_satisfying(
      m * m * m,
      [&](std::uint64_t flat) {
        const auto f = ag::subset_at_index(flat / (m * m), t.order(), chain);
        const auto g = ag::subset_at_index(flat / m % m, t.order(), chain);
        const auto h = ag::subset_at_index(flat % m, t.order(), chain);
        return ag::product(ag::product(f, g, t), h, t) !=
               ag::product(ag::product(h, g, t), f, t);
      },
      jobs);
}

void bench_law_sweep(unsigned order, unsigned k) {
  const ag::CayleyTable t = ag::CayleyTable::subtraction_mod(order);
  const ag::GradeChain chain(k);
  const auto t0 = Clock::now();
  const auto serial = law_sweep(t, chain, 1);
  const auto t1 = Clock::now();
  const auto parallel = law_sweep(t, chain, 0);
  const auto t2 = Clock::now();
  if (serial != parallel) {
    std::cout << "MISMATCH between serial and parallel law sweep\n";
    return;
  }
  const std::uint64_t m = ag::subset_space_size(order, chain);
  std::string name = "law sweep n=" + std::to_string(order) +
                     " k=" + std::to_string(k) + " (" +
                     std::to_string(m * m * m) + ")";
  report(name.c_str(), seconds_of(t0, t1), seconds_of(t1, t2),
         ag::par::effective_jobs(0));
}

}  // namespace

int main(int argc, char** argv) {
  unsigned enum_order = 5;
  if (argc > 1) enum_order = static_cast<unsigned>(std::atoi(argv[1]));
  std::cout << "kernel                          serial     parallel\n";
  bench_enumeration(4);
  if (enum_order != 4) bench_enumeration(enum_order);
  bench_law_sweep(3, 3);
  bench_law_sweep(4, 2);
  return 0;
}

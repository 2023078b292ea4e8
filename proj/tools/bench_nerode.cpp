// Compares the OpenMP signature kernel against the serial pairwise
// reference on the congruence partition, the hottest loop in the library.
#include <chrono>
#include <iostream>

#include "advicer/nerode.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace advicer;

namespace {

template <typename F>
double time_ms(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    std::size_t n = argc > 1 ? static_cast<std::size_t>(std::stoul(argv[1])) : 10;
    std::size_t depth = argc > 2 ? static_cast<std::size_t>(std::stoul(argv[2])) : 8;
    const char* langs[] = {"0n1n", "contains-11", "mod3-ones"};

#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "threads: 1 (OpenMP disabled)\n";
#endif
    std::cout << "n=" << n << " depth=" << depth << "\n";

    for (const char* lang : langs) {
        LanguageOracle oracle = catalog_oracle(lang);
        NerodeTable parallel_table, serial_table;
        double tp = time_ms([&] { parallel_table = classes_at(oracle, n, depth); });
        double ts = time_ms([&] { serial_table = classes_at_serial(oracle, n, depth); });
        bool same = parallel_table.classes.size() == serial_table.classes.size();
        std::cout << lang << ": parallel " << tp << " ms, serial " << ts << " ms, "
                  << parallel_table.classes.size() << " classes, "
                  << (same ? "match" : "MISMATCH") << "\n";
        if (!same)
            return 1;
    }
    return 0;
}

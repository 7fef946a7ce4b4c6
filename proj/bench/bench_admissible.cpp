#include <parvb/eltrans.hpp>
#include <parvb/sampling.hpp>

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace parvb;

namespace {

double run_ms(AdmissibleGroup (*fn)(const WeightVector&), const WeightVector& A, int reps) {
    auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) fn(A);
    std::chrono::duration<double, std::milli> d = std::chrono::steady_clock::now() - t0;
    return d.count() / reps;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("admissible_group: parallel (%d threads) vs serial reference\n",
                omp_get_max_threads());
#else
    std::printf("admissible_group: built without OpenMP; both columns are serial\n");
#endif
    std::printf("%4s %10s %12s %12s %8s\n", "n", "weight", "parallel ms", "serial ms",
                "speedup");
    for (int n = 8; n <= 12; ++n) {
        WeightVector A = sample_pi_interior(n, 1);
        int reps = n <= 10 ? 5 : 1;
        double par = run_ms(admissible_group, A, reps);
        double ser = run_ms(admissible_group_serial, A, reps);
        std::printf("%4d %10s %12.1f %12.1f %8.2f\n", n, "random-Pi", par, ser, ser / par);
    }
    return 0;
}

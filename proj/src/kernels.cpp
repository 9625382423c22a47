#include "pact/kernels.hpp"

#include <algorithm>
#include <tuple>

namespace pact::kernels {

std::optional<TriangleWitness> triangle_violation_serial(const double* t, int p) {
    for (int i = 0; i < p; ++i) {
        const double* ri = t + static_cast<size_t>(i) * p;
        for (int j = i + 1; j < p; ++j) {
            const double* rj = t + static_cast<size_t>(j) * p;
            const double need = ri[j] - kTriangleSlack;
            double lo = ri[0] + rj[0];
            int arg = 0;
            for (int k = 1; k < p; ++k) {
                const double s = ri[k] + rj[k];
                if (s < lo) {
                    lo = s;
                    arg = k;
                }
            }
            if (lo < need) return TriangleWitness{i, j, arg};
        }
    }
    return std::nullopt;
}

std::optional<TriangleWitness> triangle_violation_omp(const double* t, int p) {
    // lexicographically-first witness, independent of the schedule
    long best = -1;
    int best_k = 0;
#ifdef _OPENMP
#pragma omp parallel
#endif
    {
        long loc = -1;
        int loc_k = 0;
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 8) nowait
#endif
        for (int i = 0; i < p; ++i) {
            const double* ri = t + static_cast<size_t>(i) * p;
            for (int j = i + 1; j < p; ++j) {
                const double* rj = t + static_cast<size_t>(j) * p;
                const double need = ri[j] - kTriangleSlack;
                double lo = ri[0] + rj[0];
                int arg = 0;
                for (int k = 1; k < p; ++k) {
                    const double s = ri[k] + rj[k];
                    if (s < lo) {
                        lo = s;
                        arg = k;
                    }
                }
                if (lo < need) {
                    const long key = static_cast<long>(i) * p + j;
                    if (loc < 0 || key < loc) {
                        loc = key;
                        loc_k = arg;
                    }
                    break;  // larger j in this row cannot have a smaller key
                }
            }
        }
#ifdef _OPENMP
#pragma omp critical
#endif
        {
            if (loc >= 0 && (best < 0 || loc < best)) {
                best = loc;
                best_k = loc_k;
            }
        }
    }
    if (best < 0) return std::nullopt;
    return TriangleWitness{static_cast<int>(best / p), static_cast<int>(best % p), best_k};
}

std::optional<TriangleWitness> triangle_violation(const double* t, int p) {
    if (p >= 256) return triangle_violation_omp(t, p);
    return triangle_violation_serial(t, p);
}

void run_jobs(std::vector<std::function<void()>>& jobs) {
    const int n = static_cast<int>(jobs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (int i = 0; i < n; ++i) jobs[static_cast<size_t>(i)]();
}

} // namespace pact::kernels

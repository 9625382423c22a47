#ifndef PACT_KERNELS_HPP
#define PACT_KERNELS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pact::kernels {

// The inner loops below dominate every experiment: pairwise orbit-distance
// scans and metric validation. Each has a serial reference implementation
// (the *_serial variants) used by tests and the benchmark; the unsuffixed
// entry points dispatch to OpenMP versions that must produce identical
// results.

struct TriangleWitness {
    int i, j, k;
};

inline constexpr double kTriangleSlack = 1e-12;

std::optional<TriangleWitness> triangle_violation_serial(const double* t, int p);
std::optional<TriangleWitness> triangle_violation_omp(const double* t, int p);
std::optional<TriangleWitness> triangle_violation(const double* t, int p);

// Dense pairwise d_n values (row-major m*m).
template <class View>
std::vector<double> dn_matrix_serial(const View& v, int n) {
    const int m = v.size();
    std::vector<double> out(static_cast<size_t>(m) * m, 0.0);
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            const double d = v.dn(a, b, n);
            out[static_cast<size_t>(a) * m + b] = d;
            out[static_cast<size_t>(b) * m + a] = d;
        }
    return out;
}

template <class View>
std::vector<double> dn_matrix_omp(const View& v, int n) {
    const int m = v.size();
    std::vector<double> out(static_cast<size_t>(m) * m, 0.0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            const double d = v.dn(a, b, n);
            out[static_cast<size_t>(a) * m + b] = d;
            out[static_cast<size_t>(b) * m + a] = d;
        }
    return out;
}

template <class View>
std::vector<double> dn_matrix(const View& v, int n) {
    return dn_matrix_omp(v, n);
}

// Adjacency of the "too close" graph (d_n < eps) for exact searches; m <= 64.
template <class View>
std::vector<uint64_t> too_close_adj(const View& v, int n, double eps) {
    const int m = v.size();
    std::vector<uint64_t> adj(static_cast<size_t>(m), 0);
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            if (v.dn(a, b, n) < eps) {
                adj[static_cast<size_t>(a)] |= uint64_t{1} << b;
                adj[static_cast<size_t>(b)] |= uint64_t{1} << a;
            }
    return adj;
}

// Order-respecting greedy accumulation: candidate k joins unless some earlier
// accepted point blocks it. The parallel variant batches the scan against the
// already-accepted prefix and finishes each batch serially, so its output is
// identical to the serial one.
template <class Blocks>
std::vector<int> greedy_scan_serial(int m, Blocks&& blocks) {
    std::vector<int> acc;
    for (int k = 0; k < m; ++k) {
        bool hit = false;
        for (int y : acc)
            if (blocks(k, y)) {
                hit = true;
                break;
            }
        if (!hit) acc.push_back(k);
    }
    return acc;
}

template <class Blocks>
std::vector<int> greedy_scan_omp(int m, Blocks&& blocks, int batch = 512) {
    std::vector<int> acc;
    std::vector<char> hit(static_cast<size_t>(batch));
    for (int base = 0; base < m; base += batch) {
        const int hi = std::min(m, base + batch);
        const int acc_n = static_cast<int>(acc.size());
        const int* acc_p = acc.data();
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
        for (int k = base; k < hi; ++k) {
            char h = 0;
            for (int t = 0; t < acc_n; ++t)
                if (blocks(k, acc_p[t])) {
                    h = 1;
                    break;
                }
            hit[static_cast<size_t>(k - base)] = h;
        }
        for (int k = base; k < hi; ++k) {
            if (hit[static_cast<size_t>(k - base)]) continue;
            bool h2 = false;
            for (size_t t = static_cast<size_t>(acc_n); t < acc.size(); ++t)
                if (blocks(k, acc[t])) {
                    h2 = true;
                    break;
                }
            if (!h2) acc.push_back(k);
        }
    }
    return acc;
}

template <class Blocks>
std::vector<int> greedy_scan(int m, Blocks&& blocks) {
    if (m >= 1024) return greedy_scan_omp(m, blocks);
    return greedy_scan_serial(m, blocks);
}

// Runs independent jobs (one per grid cell) across threads.
void run_jobs(std::vector<std::function<void()>>& jobs);

} // namespace pact::kernels

#endif

#ifndef PACT_EXACT64_HPP
#define PACT_EXACT64_HPP

#include <cstdint>
#include <vector>

namespace pact::exact64 {

// Exact optimizers on universes of at most 64 elements, represented as
// uint64_t masks. adj[v] never contains v itself.

// Maximum independent set cardinality (branch and bound, max-degree pivot).
int max_independent_set(const std::vector<uint64_t>& adj, int n);

// All maximal cliques (Bron–Kerbosch with pivoting).
std::vector<uint64_t> maximal_cliques(const std::vector<uint64_t>& adj, int n);

// Minimum number of sets covering `universe`; -1 if infeasible.
// `chosen` (optional) receives the indices of one optimal cover.
int min_set_cover(uint64_t universe, const std::vector<uint64_t>& sets,
                  std::vector<int>* chosen = nullptr);

// Greedy cover (largest uncovered gain, ties to the lowest index); returns
// chosen set indices, empty if it stalls before covering.
std::vector<int> greedy_set_cover(uint64_t universe, const std::vector<uint64_t>& sets);

} // namespace pact::exact64

#endif

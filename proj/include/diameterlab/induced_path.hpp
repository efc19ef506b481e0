#ifndef DIAMETERLAB_INDUCED_PATH_HPP
#define DIAMETERLAB_INDUCED_PATH_HPP

#include "diameterlab/types.hpp"

namespace dlab {

enum class SearchMode { exact, heuristic };

struct InducedPathResult {
    std::vector<Facet> path;  // facets of the complete complex, in path order
    bool exact = false;       // search ran to completion
    long long nodes = 0;      // DFS expansions spent
};

// Longest induced path in the Johnson graph J(n,d) = dual graph of the
// complete complex; its length equals the maximum diameter of strongly
// connected (d-1)-complexes on n vertices.
//
// Exact mode fixes the first facet to {0..d-1} and the second to its smallest
// neighbor (the stabilizer acts transitively on neighbors), then runs a DFS
// that forbids neighbors of interior nodes. Throws SizeLimit when C(n,d)
// exceeds `vertex_cap` (scaled), and Budget when the node budget runs out.
// Heuristic mode is a seeded multi-start greedy; result flagged exact=false.
InducedPathResult longest_induced_path_johnson(int n, int d, SearchMode mode,
                                               long long budget = 50'000'000,
                                               std::uint64_t seed = 0,
                                               std::size_t vertex_cap = 128);

// True iff `path` is an induced path in J(n,d).
bool is_induced_johnson_path(int n, int d, const std::vector<Facet>& path);

}  // namespace dlab

#endif

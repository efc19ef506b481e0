#ifndef DIAMETERLAB_DIAMETER_HPP
#define DIAMETERLAB_DIAMETER_HPP

#include <optional>
#include <tuple>

#include "diameterlab/rational.hpp"
#include "diameterlab/types.hpp"

namespace dlab {

// Dual path as a list of facet indices into the complex; length = edges.
struct FacetPath {
    std::vector<int> nodes;
    int length() const { return static_cast<int>(nodes.size()) - 1; }
};

struct DiameterReport {
    int diameter = 0;
    int witness_from = 0;
    int witness_to = 0;
    FacetPath witness_path;
};

int dual_distance(const PureComplex& c, const Facet& x, const Facet& y);
int dual_distance(const PureMulticomplex& c, const Multiset& x, const Multiset& y);

// Exact diameter by all-pairs BFS, with a witness pair and a shortest witness
// path. Throws Disconnected.
DiameterReport dual_diameter(const PureComplex& c);
DiameterReport dual_diameter(const PureMulticomplex& c);

// BFS layers from one facet; -1 never occurs on connected complexes.
std::vector<int> dual_distances_from(const DualGraph& g, int start);

struct NonRevisitingResult {
    bool ok = true;
    // Violating triple i < j < k: some vertex of X_i and X_k missing from X_j.
    int i = -1, j = -1, k = -1;
};

// Checks X_i cap X_k subseteq X_j for all i<j<k, via per-vertex layer
// intervals. Path given as explicit facets.
NonRevisitingResult is_non_revisiting(const std::vector<Facet>& path);
NonRevisitingResult is_non_revisiting(const std::vector<Multiset>& path);

// Checks the path is a dual path of C (consecutive facets share a ridge, no
// repeats) before the non-revisiting test.
bool is_dual_path(const PureComplex& c, const std::vector<Facet>& path);

// floor((C(n,d-1) - d)/(d-1)): the ridge-counting upper bound for corridors,
// hence for every strongly connected pure complex. Requires d >= 2.
long long corridor_upper_bound(int n, int d);

long long binomial(int n, int k);

// delta/(n-d) - 1, exact. Requires n > d.
Rational hirsch_excess(int n, int d, int delta);

}  // namespace dlab

#endif

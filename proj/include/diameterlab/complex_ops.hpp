#ifndef DIAMETERLAB_COMPLEX_OPS_HPP
#define DIAMETERLAB_COMPLEX_OPS_HPP

#include <optional>
#include <utility>

#include "diameterlab/types.hpp"

namespace dlab {

// lk_C(S) = { X \ S : S subseteq X in C }. Rank drops by |S|, n is kept.
PureComplex link(const PureComplex& c, const Facet& s);
PureMulticomplex link(const PureMulticomplex& c, const Multiset& s);

// st_C(S): all facets containing S, as a complex of the same rank.
PureComplex star(const PureComplex& c, const Facet& s);
PureMulticomplex star(const PureMulticomplex& c, const Multiset& s);

bool is_face(const PureComplex& c, const Facet& s);
bool is_face(const PureMulticomplex& c, const Multiset& s);

// Inclusion-maximal elements of { F subseteq facet of C : S not subseteq F }.
// Cardinalities can be mixed; that is the point of the face-level deletion.
std::vector<Facet> deletion_maximal_faces(const PureComplex& c, const Facet& s);
bool is_deletion_pure(const PureComplex& c, const Facet& s);
// The surviving pure complex (facets not containing S). Only meaningful when
// is_deletion_pure holds.
PureComplex deletion_complex(const PureComplex& c, const Facet& s);

DualGraph dual_graph(const PureComplex& c);
DualGraph dual_graph(const PureMulticomplex& c);

bool is_strongly_connected(const PureComplex& c);
bool is_strongly_connected(const PureMulticomplex& c);

// Normality: the whole complex and the link of every nonempty face are
// strongly connected.
bool is_normal(const PureComplex& c);
bool is_normal(const PureMulticomplex& c);

// Every clique of the 1-skeleton is a face. A clique of size > d certifies
// failure immediately.
bool is_flag(const PureComplex& c);

bool is_pseudomanifold(const PureComplex& c);
bool is_corridor(const PureComplex& c);

// All nonempty faces, deduplicated (subsets of facets / divisors of facets).
std::vector<Facet> all_faces(const PureComplex& c);
std::vector<Multiset> all_faces(const PureMulticomplex& c);

// Graph (1-skeleton) adjacency over [n]; unused vertices get empty rows.
std::vector<std::vector<int>> skeleton_graph(const PureComplex& c);

// Minimum 1-skeleton distance between a vertex of S and a vertex of T;
// -1 encodes infinity.
int vertex_distance(const PureComplex& c, const Facet& s, const Facet& t);
// Distances from every vertex of S to all vertices (-1 unreachable).
std::vector<int> vertex_distances_from(const PureComplex& c, const Facet& s);

// Number of distinct k-dimensional faces ((k+1)-subsets of facets).
long long f_count(const PureComplex& c, int k);

}  // namespace dlab

#endif

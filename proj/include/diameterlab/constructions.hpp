#ifndef DIAMETERLAB_CONSTRUCTIONS_HPP
#define DIAMETERLAB_CONSTRUCTIONS_HPP

#include "diameterlab/types.hpp"

namespace dlab {

// All C(n,d) facets.
PureComplex complete_complex(int n, int d);
PureMulticomplex complete_multicomplex(int n, int d);

struct HamiltonianDecomposition {
    int k = 0;
    // k cycles on vertices {0..2k}; each is a closed vertex sequence of
    // length 2k+1 (closure edge implicit). Vertex 2k is the hub.
    std::vector<std::vector<int>> cycles;
};

// Walecki-style decomposition of K_{2k+1} into k Hamiltonian cycles: the
// zig-zag cycle through the hub, rotated k ways on the rim.
HamiltonianDecomposition hamiltonian_decomposition(int k);

// 2-dimensional corridor on <= n vertices of length 2k^2+k-2 for
// k = floor((n-1)/3): the k rim cycles are opened into one walk of 2k^2
// edges, each section is coned to its own apex, and consecutive sections are
// glued with a bridging triangle. Requires n >= 7.
PureComplex corridor_2complex(int n);

// Join; shifts the second complex's labels by c1.n.
PureComplex join(const PureComplex& c1, const PureComplex& c2);

enum class GridStrategy { vertical, zigzag };

// An induced path in the grid graph P_{l1} x P_{l2} ((l1+1)*(l2+1) vertices).
// `vertical` is the every-second-column construction of length
// (floor(l1/2)+1)*l2 + l1; `zigzag` covers two of every three diagonals and
// approaches 2/3 vertex usage.
std::vector<std::pair<int, int>> product_induced_path(int l1, int l2, GridStrategy strategy);

// Corridor of rank k*d on k*n vertices obtained by iterated joins of a base
// corridor, keeping the facets along the product induced path. Base ranks
// supported: d=2 (path graph) and d=3 (corridor_2complex).
PureComplex iterated_join_corridor(int n, int d, int k,
                                   GridStrategy strategy = GridStrategy::vertical);

// Facet order of a corridor along its dual path, starting at the endpoint
// with the lexicographically smaller facet.
std::vector<int> corridor_order(const PureComplex& c);

// The simplicial polar of the fractional hypersimplex: vertices +-1..+-(a+b+1)
// encoded as +i -> 2(i-1), -i -> 2(i-1)+1; facets {+i : i in S} u {-j : j in T}
// over disjoint S,T with |S|=a, |T|=b.
PureComplex nabla(int a, int b);
Facet nabla_facet(int a, int b, const std::vector<int>& plus, const std::vector<int>& minus);

// Vertices = nonempty faces, facets = maximal chains. Output is flag.
PureComplex barycentric_subdivision(const PureComplex& c);
// The face owning each subdivision vertex, in vertex-id order.
std::vector<Facet> barycentric_vertex_faces(const PureComplex& c);

PureComplex boundary_simplex(int d);  // boundary of the (d)-simplex: n=d+1 facets of size d

}  // namespace dlab

#endif

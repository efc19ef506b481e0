#ifndef DIAMETERLAB_CLM_HPP
#define DIAMETERLAB_CLM_HPP

#include <optional>
#include <random>

#include "diameterlab/types.hpp"

namespace dlab {

// Connected layer multicomplex: a pure multicomplex plus a layer index per
// facet. Valid when every face's star meets a contiguous interval of layers.
struct LayeredMulticomplex {
    PureMulticomplex base;
    std::vector<int> layer_of;  // aligned with base.facets
    int layer_min = 0;
    int layer_max = 0;

    int length() const { return layer_max - layer_min; }
    int layer_count() const { return layer_max - layer_min + 1; }
    // Facet indices per layer, layers normalized to 0..length().
    std::vector<std::vector<int>> layers() const;
    // Union of supports of the facets in one normalized layer.
    std::vector<int> layer_support(int layer) const;
};

LayeredMulticomplex make_layered(PureMulticomplex base, std::vector<int> layer_of);

struct ClmViolation {
    bool ok = true;
    Multiset face;          // witness face whose star skips a layer
    int missing_layer = 0;  // absolute layer index
};

// Checks the interval condition over all faces (divisors of facets). Also
// fails when some layer in [min,max] is empty. First violation in
// lexicographic (face, layer) order.
ClmViolation validate_clm(const LayeredMulticomplex& m);

int clm_length(const LayeredMulticomplex& m);

// Layers a strongly connected multicomplex by dual distance to X. Valid when
// the input is normal.
LayeredMulticomplex layer_by_distance(const PureMulticomplex& c, const Multiset& x);
LayeredMulticomplex layer_by_distance_complex(const PureComplex& c, const Facet& x);

// Link of a face, layer structure restricted.
LayeredMulticomplex clm_link(const LayeredMulticomplex& m, const Multiset& s);

// All degree-d multisets over [n], layered by weighted element sum
// (elements counted as 1..n); range [d, n*d], length d(n-1).
LayeredMulticomplex complete_clm(int n, int d);

// Multisets on at most two consecutive elements, one facet per layer, same
// layering and length as the complete one.
LayeredMulticomplex injective_clm(int n, int d);

struct KkSplit {
    int prefix = 0;  // max # of leading layers using <= floor((n-1)/2) elements
    int suffix = 0;  // max # of trailing layers using <= ceil((n-1)/2), capped
    int middle = 0;
    std::optional<int> witness;  // element present in every middle layer
};
KkSplit kk_split(const LayeredMulticomplex& m);

struct BlPiece {
    LayeredMulticomplex piece;
    int n_used = 0;
    int witness = -1;  // element used in every layer of the piece
};
// Greedy decomposition: each piece runs until the last layer sharing an
// element with the piece's first layer. Sum of n_used is at most 2n-1.
std::vector<BlPiece> bl_decompose(const LayeredMulticomplex& m);

struct ClmSearchResult {
    int max_length = 0;
    LayeredMulticomplex witness;
    long long nodes = 0;
};
// Exact maximum c.l.m. length for rank d on n elements, by layer-by-layer
// extension with memoization on relabeling-canonical states.
ClmSearchResult max_clm_search(int n, int d, long long budget = 200'000'000);

// Substitution i^k -> (i,1)..(i,k): a layered complex (0/1 exponents) on n*d
// elements with the same rank, layers and length.
LayeredMulticomplex multicomplex_to_complex(const LayeredMulticomplex& m);
// View a 0/1-exponent multicomplex as a plain complex.
PureComplex as_complex(const PureMulticomplex& m);

// Seeded generator of random valid c.l.m.s (for property tests).
LayeredMulticomplex random_clm(int n, int d, std::mt19937_64& rng, int max_layers = 64);

}  // namespace dlab

#endif

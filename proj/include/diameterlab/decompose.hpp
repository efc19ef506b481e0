#ifndef DIAMETERLAB_DECOMPOSE_HPP
#define DIAMETERLAB_DECOMPOSE_HPP

#include <memory>
#include <optional>

#include "diameterlab/types.hpp"

namespace dlab {

// Certificate for k-decomposability: a shedding face plus recursively
// certified deletion and link branches; leaves are single-facet complexes.
struct SheddingTree {
    bool leaf = false;
    Facet shedding_face;
    std::unique_ptr<SheddingTree> deletion;
    std::unique_ptr<SheddingTree> link;
};

struct DecomposeResult {
    bool decomposable = false;
    std::unique_ptr<SheddingTree> certificate;
    long long nodes = 0;
};

// Shedding faces are faces of the current complex of dimension <= k whose
// deletion stays pure of the same rank; the link branch is required here and
// dropped in the weak variant. Memoized on canonical facet lists.
DecomposeResult is_k_decomposable(const PureComplex& c, int k, long long budget = 20'000'000);

struct WeakDecomposeResult {
    bool decomposable = false;
    std::vector<Facet> shedding_sequence;
    long long nodes = 0;
    long long states = 0;
};

// Weak variant: only the deletion branch recurses. Memoized on the surviving
// facet set (the state is determined by the deleted shedding faces).
WeakDecomposeResult is_weakly_k_decomposable(const PureComplex& c, int k,
                                             long long budget = 50'000'000);

// Replays a certificate independently: checks base cases, face-ness,
// dimension bounds and deletion pureness at every node.
bool verify_shedding_tree(const PureComplex& c, const SheddingTree& tree, int k);
bool verify_shedding_sequence(const PureComplex& c, const std::vector<Facet>& sequence, int k);

struct DkCase {
    std::string name;
    std::vector<Facet> shed_vertices;  // the initial shedding vertices of the case
    Facet surviving_facet;             // full-dimensional facet that survives
    Facet uncovered_ridge;             // ridge left uncovered, certifying non-pureness
    bool non_pure = false;
};

// The case analysis behind non-weak-vertex-decomposability of nabla(a,b):
// after the symmetry reduction, two "+" deletions (or two "+" and one "-")
// always leave a full-dimensional complex with an uncovered ridge.
std::vector<DkCase> dk_obstruction_witness(int a, int b);

struct ProvanBilleraReport {
    bool decomposable = false;
    bool weakly_decomposable = false;
    int diameter = -1;
    long long f_k = 0;
    long long strong_bound = -1;  // f_k - C(d, k+1)
    long long weak_bound = -1;    // 2 f_k
    bool strong_ok = true;
    bool weak_ok = true;
};

ProvanBilleraReport provan_billera_check(const PureComplex& c, int k);

}  // namespace dlab

#endif

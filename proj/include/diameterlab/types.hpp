#ifndef DIAMETERLAB_TYPES_HPP
#define DIAMETERLAB_TYPES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dlab {

// Vertex ids live in [0, n). A facet is a strictly increasing list of
// vertex ids; a multiset facet is a length-n exponent vector.
using Facet = std::vector<int>;
using Multiset = std::vector<int>;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotAFaceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DisconnectedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SizeLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct TooSmallError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotNormalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotFlagError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BadAnchorError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Pure (d-1)-complex on [n], stored as a lex-sorted duplicate-free facet list.
// The vertex universe may contain unused vertices.
struct PureComplex {
    int n = 0;
    int d = 0;
    std::vector<Facet> facets;

    PureComplex() = default;
    PureComplex(int n_, int d_, std::vector<Facet> facets_);

    std::size_t size() const { return facets.size(); }
    bool operator==(const PureComplex&) const = default;

    // Sorts, deduplicates and checks the type invariants. Throws InputError.
    void normalize();
    std::vector<int> used_vertices() const;
};

// Pure multicomplex of rank d on [n]: multisets as exponent vectors.
struct PureMulticomplex {
    int n = 0;
    int d = 0;
    std::vector<Multiset> facets;

    PureMulticomplex() = default;
    PureMulticomplex(int n_, int d_, std::vector<Multiset> facets_);

    std::size_t size() const { return facets.size(); }
    bool operator==(const PureMulticomplex&) const = default;

    void normalize();
    std::vector<int> used_vertices() const;
};

// Dual graph: one node per facet, node order matches facet order.
struct DualGraph {
    std::vector<std::vector<int>> adj;
    std::size_t size() const { return adj.size(); }
};

int multiset_degree(const Multiset& m);
bool multiset_divides(const Multiset& a, const Multiset& b);  // a <= b componentwise
Multiset multiset_union(const Multiset& a, const Multiset& b);         // componentwise max
Multiset multiset_intersection(const Multiset& a, const Multiset& b);  // componentwise min
Multiset facet_to_multiset(const Facet& f, int n);
Facet multiset_support(const Multiset& m);

// |a \ b| for sorted vertex sets.
int set_difference_size(const Facet& a, const Facet& b);
bool is_subset(const Facet& a, const Facet& b);
Facet set_minus(const Facet& a, const Facet& b);
Facet set_union(const Facet& a, const Facet& b);
Facet set_intersect(const Facet& a, const Facet& b);

std::string facet_to_string(const Facet& f);
std::string multiset_to_string(const Multiset& m);

// Size caps for the exhaustive operations. DIAMETER_LAB_CAPS (a positive
// float) scales every cap; unset means 1.0.
double caps_multiplier();
std::size_t scaled_cap(std::size_t base);

}  // namespace dlab

#endif

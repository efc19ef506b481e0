#ifndef DIAMETERLAB_BOUNDS_HPP
#define DIAMETERLAB_BOUNDS_HPP

#include <optional>
#include <string>

#include "diameterlab/rational.hpp"
#include "diameterlab/types.hpp"

namespace dlab {

struct BoundEntry {
    std::string name;
    std::string kind;  // "upper" | "lower" | "exact" | "conjectural"
    double value = 0.0;
    bool exact_rational = false;
    Rational rational;       // set when exact_rational
    bool constant_free = false;  // evaluated with constant 1, no stated constant
    std::string note;
};

struct BoundReport {
    std::string context;
    std::vector<BoundEntry> entries;
    const BoundEntry* find(const std::string& name) const;
};

// Quasi-polynomial layer bound n^(log2 d + 1) - 1.
double kalai_kleitman_clm(int n, int d);
// Linear-in-fixed-rank layer bound (n-1) 2^(d-1).
long long barnette_larman_clm(int n, int d);

// Polytope diameter bounds for given n facets, dimension d.
BoundReport polytope_bounds(int n, int d);

// Known exact maximum diameters of bounded polytopes: the small-parameter
// table, the d <= 3 formulas, and the n < 2d reduction.
std::optional<long long> known_Hb(int n, int d);

struct StrongDstepResult {
    int dimension = 0;   // D = n - d
    int facets = 0;      // N = 2(n - d)
    int diameter_lb = 0; // l + (n - 2d)
    bool violates_hirsch = false;
};
// Arithmetic consequence of repeated wedging of a spindle of length l.
StrongDstepResult strong_dstep(int n, int d, int l);

Rational spindle_excess(int n, int d, int l);     // (l-d)/(n-d)
Rational asymptotic_excess(const Rational& eps, int k);  // (1 - 1/k) eps

struct MswSpindle {
    long long facets = 0;  // 12k(6k-1)
    int width = 0;         // 4 + k
    Rational excess;       // (k-1)/(12k(6k-1)-5)
};
MswSpindle msw_spindle(int k);

// Subdeterminant-based diameter bounds for integer matrices with
// subdeterminants bounded by M, plus the comparison entries.
BoundReport subdeterminant_bounds(int d, long long M, int n);

// Assorted layer-family and support-sequence bounds.
BoundReport misc_bounds(int n, int d, int k);

}  // namespace dlab

#endif

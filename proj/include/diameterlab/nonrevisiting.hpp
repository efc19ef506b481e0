#ifndef DIAMETERLAB_NONREVISITING_HPP
#define DIAMETERLAB_NONREVISITING_HPP

#include <memory>

#include "diameterlab/diameter.hpp"
#include "diameterlab/types.hpp"

namespace dlab {

// Recursion trace of a combinatorial segment. Case 0: the start facet already
// meets the target set. Case 1: rank one, a single step into the target.
// Case 2: a link recursion around the anchor (head part, up to the pivot)
// followed by a segment from the pivot facet (tail part).
struct SegmentTrace {
    int case_tag = 0;
    int anchor = -1;        // x
    int pivot_index = -1;   // k: index of the pivot facet within this path
    int pivot_vertex = -1;  // y: the vertex the pivot step introduces
    std::unique_ptr<SegmentTrace> head;  // trace of the link segment (case 2)
    std::unique_ptr<SegmentTrace> tail;  // trace of the continuation (case 2)
};

struct SegmentCertificate {
    std::vector<Facet> path;
    Facet target;  // the vertex set S
    int anchor = -1;
    std::unique_ptr<SegmentTrace> trace;
};

// Builds the anchored facet path from X toward the vertex set S by the double
// recursion on dimension and vertex distance. Requires C normal (checked when
// check_normal) and vdist(X,S) = vdist(x,S) for the anchor.
SegmentCertificate combinatorial_segment(const PureComplex& c, const Facet& x_facet,
                                         const Facet& target, int anchor,
                                         bool check_normal = true);

// Replays a certificate: anchor conditions, the case analysis, weakly
// decreasing vertex distance, and (on flag complexes) the star-membership
// property of the head part.
bool segment_monotone_check(const PureComplex& c, const SegmentCertificate& cert);

// Non-revisiting dual path between two facets of a flag normal complex:
// common vertices are handled in the link, otherwise a combinatorial segment
// reaches the star of a target vertex and the rest is recursive. The result
// is re-checked; a path is never returned uncertified.
std::vector<Facet> non_revisiting_path(const PureComplex& c, const Facet& from, const Facet& to,
                                       bool require_flag = true, bool check_preconditions = true);

}  // namespace dlab

#endif

#ifndef DIAMETERLAB_CANONICAL_HPP
#define DIAMETERLAB_CANONICAL_HPP

#include "diameterlab/types.hpp"

namespace dlab {

struct CanonicalForm {
    PureComplex complex;
    std::vector<int> relabeling;  // relabeling[old id] = new id
};

// Minimum lexicographic facet list over all vertex relabelings. Used vertices
// are assigned labels 0..u-1 by a pruned backtracking search; unused ones keep
// their relative order above. Throws SizeLimit when more than `cap` vertices
// are used (default 12, scaled by DIAMETER_LAB_CAPS).
CanonicalForm canonical_form(const PureComplex& c, std::size_t cap = 12);

PureComplex relabel(const PureComplex& c, const std::vector<int>& relabeling);

}  // namespace dlab

#endif

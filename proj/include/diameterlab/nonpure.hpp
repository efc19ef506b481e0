#ifndef DIAMETERLAB_NONPURE_HPP
#define DIAMETERLAB_NONPURE_HPP

#include <cstdint>
#include <optional>

#include "diameterlab/types.hpp"

namespace dlab {

// Layered family of arbitrary subsets of [n] (mixed cardinalities, the empty
// set allowed). "Length" counts layers here, not layers minus one.
struct NonpureLayeredFamily {
    int n = 0;
    std::vector<std::vector<std::uint32_t>> layers;  // sets as bitmasks

    int length() const { return static_cast<int>(layers.size()); }
};

struct NonpureViolation {
    bool ok = true;
    std::uint32_t subset = 0;
    int missing_layer = -1;
};

// Interval condition over every subset S of [n] (2^n checks; n <= 10 cap).
NonpureViolation validate_nonpure(const NonpureLayeredFamily& f);

// The 11-layer family on 5 elements showing H_np(5) >= 11.
NonpureLayeredFamily example_hnp5();

// The 2-layer seed on one element.
NonpureLayeredFamily seed_hnp1();

// Inserts a layer {X u {n+1}} and a layer {{n+1}} before the final {empty}
// layer, where X is the lexicographically smallest set of the layer before
// the final one. Adds exactly 2 to the length.
NonpureLayeredFamily extend_nonpure(const NonpureLayeredFamily& f);

}  // namespace dlab

#endif

#include "diameterlab/nonpure.hpp"

#include <algorithm>

namespace dlab {

NonpureViolation validate_nonpure(const NonpureLayeredFamily& f) {
    NonpureViolation result;
    if (f.n > static_cast<int>(scaled_cap(10)))
        throw SizeLimitError("validate_nonpure: n cap exceeded");
    for (const auto& layer : f.layers)
        if (layer.empty()) {
            result.ok = false;
            result.missing_layer = static_cast<int>(&layer - f.layers.data());
            return result;
        }
    for (std::uint32_t s = 0; s < (1u << f.n); ++s) {
        int lo = -1, hi = -1;
        for (int l = 0; l < f.length(); ++l) {
            bool present = false;
            for (std::uint32_t x : f.layers[l])
                if ((x & s) == s) present = true;
            if (present) {
                if (lo < 0) lo = l;
                hi = l;
            }
        }
        for (int l = lo; l >= 0 && l <= hi; ++l) {
            bool present = false;
            for (std::uint32_t x : f.layers[l])
                if ((x & s) == s) present = true;
            if (!present) {
                result.ok = false;
                result.subset = s;
                result.missing_layer = l;
                return result;
            }
        }
    }
    return result;
}

namespace {

std::uint32_t mask_of(std::initializer_list<int> elems) {
    std::uint32_t m = 0;
    for (int e : elems) m |= 1u << (e - 1);  // elements named 1..n
    return m;
}

}  // namespace

NonpureLayeredFamily example_hnp5() {
    NonpureLayeredFamily f;
    f.n = 5;
    f.layers = {
        {mask_of({1})},
        {mask_of({1, 5})},
        {mask_of({1, 4}), mask_of({5})},
        {mask_of({1, 2}), mask_of({3, 5}), mask_of({4})},
        {mask_of({1, 3}), mask_of({2, 5}), mask_of({4, 5})},
        {mask_of({2, 4, 5}), mask_of({3})},
        {mask_of({2, 4}), mask_of({3, 4})},
        {mask_of({2, 3, 4})},
        {mask_of({2, 3})},
        {mask_of({2})},
        {0u},
    };
    return f;
}

NonpureLayeredFamily seed_hnp1() {
    NonpureLayeredFamily f;
    f.n = 1;
    f.layers = {{mask_of({1})}, {0u}};
    return f;
}

NonpureLayeredFamily extend_nonpure(const NonpureLayeredFamily& f) {
    if (f.layers.empty()) throw InputError("extend_nonpure: empty family");
    NonpureLayeredFamily out;
    out.n = f.n + 1;
    out.layers = f.layers;
    if (out.layers.back() != std::vector<std::uint32_t>{0u})
        throw InputError("extend_nonpure: last layer must be {empty set}");
    if (out.layers.size() < 2) throw InputError("extend_nonpure: need a layer before the last");
    std::uint32_t x = *std::min_element(out.layers[out.layers.size() - 2].begin(),
                                        out.layers[out.layers.size() - 2].end());
    std::uint32_t fresh = 1u << f.n;  // the new element n+1
    // Two layers before the final {empty} one.
    out.layers.pop_back();
    out.layers.push_back({x | fresh});
    out.layers.push_back({fresh});
    out.layers.push_back({0u});
    return out;
}

}  // namespace dlab

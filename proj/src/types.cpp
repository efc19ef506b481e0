#include "diameterlab/types.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace dlab {

PureComplex::PureComplex(int n_, int d_, std::vector<Facet> facets_)
    : n(n_), d(d_), facets(std::move(facets_)) {
    normalize();
}

void PureComplex::normalize() {
    if (n < 0 || d < 0) throw InputError("complex: n and d must be non-negative");
    for (auto& f : facets) {
        std::sort(f.begin(), f.end());
        if (static_cast<int>(f.size()) != d)
            throw InputError("complex: facet of size " + std::to_string(f.size()) +
                             ", expected " + std::to_string(d));
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (f[i] < 0 || f[i] >= n) throw InputError("complex: vertex id out of range");
            if (i > 0 && f[i] == f[i - 1]) throw InputError("complex: repeated vertex in facet");
        }
    }
    std::sort(facets.begin(), facets.end());
    auto last = std::unique(facets.begin(), facets.end());
    if (last != facets.end()) throw InputError("complex: duplicate facets");
}

std::vector<int> PureComplex::used_vertices() const {
    std::vector<char> seen(n, 0);
    for (const auto& f : facets)
        for (int v : f) seen[v] = 1;
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (seen[v]) out.push_back(v);
    return out;
}

PureMulticomplex::PureMulticomplex(int n_, int d_, std::vector<Multiset> facets_)
    : n(n_), d(d_), facets(std::move(facets_)) {
    normalize();
}

void PureMulticomplex::normalize() {
    if (n < 0 || d < 0) throw InputError("multicomplex: n and d must be non-negative");
    for (const auto& m : facets) {
        if (static_cast<int>(m.size()) != n)
            throw InputError("multicomplex: exponent row must have length n");
        int deg = 0;
        for (int e : m) {
            if (e < 0) throw InputError("multicomplex: negative exponent");
            deg += e;
        }
        if (deg != d) throw InputError("multicomplex: facet degree != d");
    }
    std::sort(facets.begin(), facets.end());
    auto last = std::unique(facets.begin(), facets.end());
    if (last != facets.end()) throw InputError("multicomplex: duplicate facets");
}

std::vector<int> PureMulticomplex::used_vertices() const {
    std::vector<char> seen(n, 0);
    for (const auto& m : facets)
        for (int v = 0; v < n; ++v)
            if (m[v] > 0) seen[v] = 1;
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (seen[v]) out.push_back(v);
    return out;
}

int multiset_degree(const Multiset& m) {
    return std::accumulate(m.begin(), m.end(), 0);
}

bool multiset_divides(const Multiset& a, const Multiset& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Multiset multiset_union(const Multiset& a, const Multiset& b) {
    Multiset out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
    return out;
}

Multiset multiset_intersection(const Multiset& a, const Multiset& b) {
    Multiset out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::min(a[i], b[i]);
    return out;
}

Multiset facet_to_multiset(const Facet& f, int n) {
    Multiset out(n, 0);
    for (int v : f) out[v] += 1;
    return out;
}

Facet multiset_support(const Multiset& m) {
    Facet out;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] > 0) out.push_back(static_cast<int>(i));
    return out;
}

int set_difference_size(const Facet& a, const Facet& b) {
    int count = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size()) {
        if (j == b.size() || a[i] < b[j]) {
            ++count;
            ++i;
        } else if (a[i] == b[j]) {
            ++i;
            ++j;
        } else {
            ++j;
        }
    }
    return count;
}

bool is_subset(const Facet& a, const Facet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Facet set_minus(const Facet& a, const Facet& b) {
    Facet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Facet set_union(const Facet& a, const Facet& b) {
    Facet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Facet set_intersect(const Facet& a, const Facet& b) {
    Facet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::string facet_to_string(const Facet& f) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) os << ',';
        os << f[i];
    }
    os << '}';
    return os.str();
}

std::string multiset_to_string(const Multiset& m) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) os << ',';
        os << m[i];
    }
    os << ']';
    return os.str();
}

double caps_multiplier() {
    static const double mult = [] {
        const char* env = std::getenv("DIAMETER_LAB_CAPS");
        if (!env) return 1.0;
        char* end = nullptr;
        double v = std::strtod(env, &end);
        if (end == env || v <= 0.0) return 1.0;
        return v;
    }();
    return mult;
}

std::size_t scaled_cap(std::size_t base) {
    return static_cast<std::size_t>(static_cast<double>(base) * caps_multiplier());
}

}  // namespace dlab

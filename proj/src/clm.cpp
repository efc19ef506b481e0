#include "diameterlab/clm.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "diameterlab/complex_ops.hpp"
#include "diameterlab/diameter.hpp"

namespace dlab {

std::vector<std::vector<int>> LayeredMulticomplex::layers() const {
    std::vector<std::vector<int>> out(layer_count());
    for (std::size_t i = 0; i < layer_of.size(); ++i)
        out[layer_of[i] - layer_min].push_back(static_cast<int>(i));
    return out;
}

std::vector<int> LayeredMulticomplex::layer_support(int layer) const {
    std::vector<char> seen(base.n, 0);
    for (std::size_t i = 0; i < layer_of.size(); ++i)
        if (layer_of[i] - layer_min == layer)
            for (int v = 0; v < base.n; ++v)
                if (base.facets[i][v] > 0) seen[v] = 1;
    std::vector<int> out;
    for (int v = 0; v < base.n; ++v)
        if (seen[v]) out.push_back(v);
    return out;
}

LayeredMulticomplex make_layered(PureMulticomplex base, std::vector<int> layer_of) {
    if (base.size() != layer_of.size())
        throw InputError("make_layered: one layer index per facet required");
    LayeredMulticomplex m;
    m.base = std::move(base);
    m.layer_of = std::move(layer_of);
    if (!m.layer_of.empty()) {
        m.layer_min = *std::min_element(m.layer_of.begin(), m.layer_of.end());
        m.layer_max = *std::max_element(m.layer_of.begin(), m.layer_of.end());
    }
    return m;
}

ClmViolation validate_clm(const LayeredMulticomplex& m) {
    ClmViolation result;
    if (m.base.size() == 0) return result;
    auto layer_lists = m.layers();
    for (int l = 0; l < m.layer_count(); ++l)
        if (layer_lists[l].empty()) {
            result.ok = false;
            result.face = Multiset(m.base.n, 0);
            result.missing_layer = m.layer_min + l;
            return result;
        }
    for (const auto& s : all_faces(m.base)) {
        int lo = -1, hi = -1;
        for (std::size_t i = 0; i < m.base.size(); ++i) {
            if (!multiset_divides(s, m.base.facets[i])) continue;
            int l = m.layer_of[i];
            if (lo < 0 || l < lo) lo = l;
            if (hi < 0 || l > hi) hi = l;
        }
        for (int l = lo; l <= hi; ++l) {
            bool present = false;
            for (std::size_t i = 0; i < m.base.size() && !present; ++i)
                if (m.layer_of[i] == l && multiset_divides(s, m.base.facets[i])) present = true;
            if (!present) {
                result.ok = false;
                result.face = s;
                result.missing_layer = l;
                return result;
            }
        }
    }
    return result;
}

int clm_length(const LayeredMulticomplex& m) { return m.length(); }

LayeredMulticomplex layer_by_distance(const PureMulticomplex& c, const Multiset& x) {
    auto it = std::lower_bound(c.facets.begin(), c.facets.end(), x);
    if (it == c.facets.end() || *it != x) throw InputError("layer_by_distance: not a facet");
    auto dist = dual_distances_from(dual_graph(c), static_cast<int>(it - c.facets.begin()));
    for (int d : dist)
        if (d < 0) throw DisconnectedError("layer_by_distance: dual graph disconnected");
    return make_layered(c, dist);
}

LayeredMulticomplex layer_by_distance_complex(const PureComplex& c, const Facet& x) {
    std::vector<Multiset> ms;
    ms.reserve(c.size());
    for (const auto& f : c.facets) ms.push_back(facet_to_multiset(f, c.n));
    PureMulticomplex mc(c.n, c.d, std::move(ms));
    return layer_by_distance(mc, facet_to_multiset(x, c.n));
}

LayeredMulticomplex clm_link(const LayeredMulticomplex& m, const Multiset& s) {
    int deg = multiset_degree(s);
    if (deg == 0) return m;
    std::vector<Multiset> facets;
    std::vector<int> layers;
    for (std::size_t i = 0; i < m.base.size(); ++i) {
        if (!multiset_divides(s, m.base.facets[i])) continue;
        Multiset rest(m.base.n);
        for (int v = 0; v < m.base.n; ++v) rest[v] = m.base.facets[i][v] - s[v];
        facets.push_back(std::move(rest));
        layers.push_back(m.layer_of[i]);
    }
    if (facets.empty()) throw NotAFaceError("clm_link: not a face");
    // Sort facets (with their layers) to keep the type invariant.
    std::vector<std::size_t> order(facets.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return facets[a] < facets[b]; });
    std::vector<Multiset> sorted_facets;
    std::vector<int> sorted_layers;
    for (auto idx : order) {
        sorted_facets.push_back(facets[idx]);
        sorted_layers.push_back(layers[idx]);
    }
    return make_layered(PureMulticomplex(m.base.n, m.base.d - deg, std::move(sorted_facets)),
                        std::move(sorted_layers));
}

LayeredMulticomplex complete_clm(int n, int d) {
    auto base = complete_multicomplex(n, d);
    std::vector<int> layers(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
        int sum = 0;
        for (int v = 0; v < n; ++v) sum += (v + 1) * base.facets[i][v];
        layers[i] = sum;
    }
    return make_layered(std::move(base), std::move(layers));
}

LayeredMulticomplex injective_clm(int n, int d) {
    if (n < 1 || d < 1) throw InputError("injective_clm: n,d >= 1");
    std::vector<Multiset> facets;
    std::vector<int> layers;
    // i^p (i+1)^(d-p): weighted sums hit every value in [d, n*d] exactly once.
    for (int i = 1; i <= n; ++i) {
        int pmax = (i == n) ? d : d;
        for (int p = pmax; p >= 1; --p) {
            if (i == n && p != d) break;
            Multiset ms(n, 0);
            ms[i - 1] = p;
            if (p < d) ms[i] = d - p;
            int sum = i * p + (i + 1) * (d - p);
            facets.push_back(std::move(ms));
            layers.push_back(sum);
        }
    }
    std::vector<std::size_t> order(facets.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return facets[a] < facets[b]; });
    std::vector<Multiset> sf;
    std::vector<int> sl;
    for (auto idx : order) {
        sf.push_back(facets[idx]);
        sl.push_back(layers[idx]);
    }
    return make_layered(PureMulticomplex(n, d, std::move(sf)), std::move(sl));
}

KkSplit kk_split(const LayeredMulticomplex& m) {
    KkSplit split;
    int n = m.base.n;
    int count = m.layer_count();
    auto layer_lists = m.layers();
    auto support_of = [&](int from, int to) {  // layers [from, to)
        std::set<int> s;
        for (int l = from; l < to; ++l)
            for (int v : m.layer_support(l)) s.insert(v);
        return s;
    };
    int lo_cap = (n - 1) / 2, hi_cap = n / 2;  // floor, ceil of (n-1)/2
    int i = 0;
    while (i < count && static_cast<int>(support_of(0, i + 1).size()) <= lo_cap) ++i;
    int j = 0;
    while (j < count - i && static_cast<int>(support_of(count - j - 1, count).size()) <= hi_cap)
        ++j;
    split.prefix = i;
    split.suffix = j;
    split.middle = count - i - j;
    if (split.middle >= 1) {
        // The first i+1 layers use more than floor((n-1)/2) elements and the
        // last j+1 use more than ceil((n-1)/2), so the two blocks share one;
        // its star interval covers the whole middle.
        auto head = support_of(0, std::min(i + 1, count));
        auto tail = support_of(std::max(0, count - j - 1), count);
        for (int v : head)
            if (tail.count(v)) {
                split.witness = v;
                break;
            }
    }
    return split;
}

namespace {

LayeredMulticomplex slice_layers(const LayeredMulticomplex& m, int from, int to) {
    std::vector<Multiset> facets;
    std::vector<int> layers;
    for (std::size_t i = 0; i < m.base.size(); ++i) {
        int l = m.layer_of[i] - m.layer_min;
        if (l >= from && l <= to) {
            facets.push_back(m.base.facets[i]);
            layers.push_back(l - from);
        }
    }
    std::vector<std::size_t> order(facets.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return facets[a] < facets[b]; });
    std::vector<Multiset> sf;
    std::vector<int> sl;
    for (auto idx : order) {
        sf.push_back(facets[idx]);
        sl.push_back(layers[idx]);
    }
    return make_layered(PureMulticomplex(m.base.n, m.base.d, std::move(sf)), std::move(sl));
}

}  // namespace

std::vector<BlPiece> bl_decompose(const LayeredMulticomplex& m) {
    std::vector<BlPiece> pieces;
    int count = m.layer_count();
    int start = 0;
    while (start < count) {
        auto head = m.layer_support(start);
        std::set<int> head_set(head.begin(), head.end());
        int last = start;
        for (int l = start + 1; l < count; ++l) {
            for (int v : m.layer_support(l))
                if (head_set.count(v)) {
                    last = l;
                    break;
                }
        }
        BlPiece piece;
        piece.piece = slice_layers(m, start, last);
        std::set<int> used;
        for (int l = 0; l <= last - start; ++l)
            for (int v : piece.piece.layer_support(l)) used.insert(v);
        piece.n_used = static_cast<int>(used.size());
        // An element shared by the first and last layer spans the piece.
        auto tail = piece.piece.layer_support(last - start);
        piece.witness = -1;
        for (int v : tail)
            if (head_set.count(v)) {
                piece.witness = v;
                break;
            }
        if (piece.witness < 0 && !head.empty()) piece.witness = head.front();
        pieces.push_back(std::move(piece));
        start = last + 1;
    }
    return pieces;
}

// ---------------------------------------------------------------------------
// Exhaustive search for the maximum c.l.m. length.
// A state is (facet set of the previous layer, set of closed faces): a face
// is closed once its star has started and then stopped, so a new layer may
// only use facets all of whose faces are still open, and may not repeat a
// facet. Memoized modulo element relabeling.

namespace {

struct ClmSearch {
    int n, d;
    std::vector<Multiset> facets;                   // all degree-d multisets
    std::vector<Multiset> faces;                    // all degree 1..d multisets
    std::vector<std::vector<int>> faces_of_facet;   // divisor face ids
    std::vector<std::vector<int>> facet_perm;       // per permutation: facet relabeling
    std::vector<std::vector<int>> face_perm;
    std::map<std::pair<std::vector<int>, std::vector<std::uint64_t>>,
             std::pair<int, std::vector<int>>>
        memo;  // canonical (prev layer, closed) -> (best additional layers, next layer)
    long long budget;
    long long nodes = 0;

    ClmSearch(int n_, int d_, long long budget_) : n(n_), d(d_), budget(budget_) {
        facets = complete_multicomplex(n, d).facets;
        for (int deg = 1; deg <= d; ++deg)
            for (const auto& f : complete_multicomplex(n, deg).facets) faces.push_back(f);
        std::sort(faces.begin(), faces.end());
        faces_of_facet.resize(facets.size());
        for (std::size_t i = 0; i < facets.size(); ++i)
            for (std::size_t j = 0; j < faces.size(); ++j)
                if (multiset_divides(faces[j], facets[i]))
                    faces_of_facet[i].push_back(static_cast<int>(j));
        // Element permutations act on multisets by permuting exponents.
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::vector<int> fac_map(facets.size()), face_map(faces.size());
            auto apply = [&](const Multiset& m) {
                Multiset out(n);
                for (int v = 0; v < n; ++v) out[perm[v]] = m[v];
                return out;
            };
            for (std::size_t i = 0; i < facets.size(); ++i) {
                auto img = apply(facets[i]);
                fac_map[i] = static_cast<int>(
                    std::lower_bound(facets.begin(), facets.end(), img) - facets.begin());
            }
            for (std::size_t j = 0; j < faces.size(); ++j) {
                auto img = apply(faces[j]);
                face_map[j] = static_cast<int>(
                    std::lower_bound(faces.begin(), faces.end(), img) - faces.begin());
            }
            facet_perm.push_back(std::move(fac_map));
            face_perm.push_back(std::move(face_map));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    using Closed = std::vector<std::uint64_t>;

    bool closed_test(const Closed& c, int face) const {
        return (c[face >> 6] >> (face & 63)) & 1;
    }
    void closed_set(Closed& c, int face) const { c[face >> 6] |= 1ull << (face & 63); }

    std::pair<std::vector<int>, Closed> canonical(const std::vector<int>& prev,
                                                  const Closed& closed) const {
        std::pair<std::vector<int>, Closed> best;
        bool have = false;
        for (std::size_t p = 0; p < facet_perm.size(); ++p) {
            std::vector<int> prev_img;
            prev_img.reserve(prev.size());
            for (int f : prev) prev_img.push_back(facet_perm[p][f]);
            std::sort(prev_img.begin(), prev_img.end());
            Closed closed_img(closed.size(), 0);
            for (std::size_t j = 0; j < faces.size(); ++j)
                if (closed_test(closed, static_cast<int>(j)))
                    closed_set(closed_img, face_perm[p][static_cast<int>(j)]);
            auto cand = std::make_pair(std::move(prev_img), std::move(closed_img));
            if (!have || cand < best) {
                best = std::move(cand);
                have = true;
            }
        }
        return best;
    }

    // Facets usable in the next layer.
    std::vector<int> allowed(const std::vector<int>& prev, const Closed& closed) const {
        std::vector<int> out;
        for (std::size_t i = 0; i < facets.size(); ++i) {
            if (std::binary_search(prev.begin(), prev.end(), static_cast<int>(i))) continue;
            bool ok = true;
            for (int face : faces_of_facet[i])
                if (closed_test(closed, face)) {
                    ok = false;
                    break;
                }
            if (ok) out.push_back(static_cast<int>(i));
        }
        return out;
    }

    // Max number of additional layers after a layer with facet set `prev`.
    std::pair<int, std::vector<int>> extend(const std::vector<int>& prev, const Closed& closed) {
        if (++nodes > budget) throw BudgetError("max_clm_search: budget exceeded");
        auto key = canonical(prev, closed);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;

        auto avail = allowed(prev, closed);
        std::pair<int, std::vector<int>> best{0, {}};
        // Closing faces of prev that the next layer does not keep.
        std::vector<int> prev_faces;
        for (int f : prev)
            for (int face : faces_of_facet[f]) prev_faces.push_back(face);
        std::sort(prev_faces.begin(), prev_faces.end());
        prev_faces.erase(std::unique(prev_faces.begin(), prev_faces.end()), prev_faces.end());

        int m = static_cast<int>(avail.size());
        if (m > 0 && best.first < m) {
            std::set<std::pair<std::vector<int>, Closed>> seen_children;
            for (std::uint64_t mask = 1; mask < (1ull << m); ++mask) {
                std::vector<int> layer;
                for (int b = 0; b < m; ++b)
                    if (mask & (1ull << b)) layer.push_back(avail[b]);
                Closed next_closed = closed;
                std::vector<char> kept(faces.size(), 0);
                for (int f : layer)
                    for (int face : faces_of_facet[f]) kept[face] = 1;
                for (int face : prev_faces)
                    if (!kept[face]) closed_set(next_closed, face);
                auto child_key = canonical(layer, next_closed);
                if (!seen_children.insert(child_key).second) continue;
                auto sub = extend(layer, next_closed);
                if (1 + sub.first > best.first) {
                    best.first = 1 + sub.first;
                    best.second = layer;
                    if (best.first == m) break;  // cannot do better than one facet per layer
                }
            }
        }
        memo[key] = best;
        return best;
    }
};

}  // namespace

ClmSearchResult max_clm_search(int n, int d, long long budget) {
    if (n < 1 || d < 1) throw InputError("max_clm_search: n,d >= 1");
    long long facet_count = binomial(n + d - 1, d);
    if (facet_count > static_cast<long long>(scaled_cap(24)))
        throw SizeLimitError("max_clm_search: facet universe too large");

    ClmSearch search(n, d, budget);
    int m = static_cast<int>(search.facets.size());
    ClmSearchResult result;
    std::set<std::pair<std::vector<int>, ClmSearch::Closed>> seen;
    ClmSearch::Closed empty_closed((search.faces.size() + 63) / 64, 0);

    std::vector<int> best_first;
    int best_len = -1;
    for (std::uint64_t mask = 1; mask < (1ull << m); ++mask) {
        std::vector<int> layer;
        for (int b = 0; b < m; ++b)
            if (mask & (1ull << b)) layer.push_back(b);
        auto key = search.canonical(layer, empty_closed);
        if (!seen.insert(key).second) continue;
        auto sub = search.extend(layer, empty_closed);
        if (sub.first > best_len) {
            best_len = sub.first;
            best_first = layer;
        }
    }
    result.max_length = best_len;
    result.nodes = search.nodes;

    // Rebuild the witness by replaying memoized best child layers.
    std::vector<std::vector<int>> layer_seq;
    std::vector<int> cur = best_first;
    ClmSearch::Closed closed = empty_closed;
    layer_seq.push_back(cur);
    while (true) {
        auto key = search.canonical(cur, closed);
        auto entry = search.memo.at(key);
        if (entry.first == 0) break;
        // entry.second is stored in canonical space of `key`; replay the
        // search step directly instead to stay in the current labeling.
        auto avail = search.allowed(cur, closed);
        std::vector<int> prev_faces;
        for (int f : cur)
            for (int face : search.faces_of_facet[f]) prev_faces.push_back(face);
        std::sort(prev_faces.begin(), prev_faces.end());
        prev_faces.erase(std::unique(prev_faces.begin(), prev_faces.end()), prev_faces.end());
        int mm = static_cast<int>(avail.size());
        bool advanced = false;
        for (std::uint64_t mask = 1; mask < (1ull << mm) && !advanced; ++mask) {
            std::vector<int> layer;
            for (int b = 0; b < mm; ++b)
                if (mask & (1ull << b)) layer.push_back(avail[b]);
            ClmSearch::Closed next_closed = closed;
            std::vector<char> kept(search.faces.size(), 0);
            for (int f : layer)
                for (int face : search.faces_of_facet[f]) kept[face] = 1;
            for (int face : prev_faces)
                if (!kept[face]) search.closed_set(next_closed, face);
            auto child_key = search.canonical(layer, next_closed);
            auto child = search.memo.find(child_key);
            if (child != search.memo.end() && 1 + child->second.first == entry.first) {
                layer_seq.push_back(layer);
                cur = layer;
                closed = next_closed;
                advanced = true;
            }
        }
        if (!advanced) break;
    }

    std::vector<Multiset> facets;
    std::vector<int> layer_of;
    for (std::size_t l = 0; l < layer_seq.size(); ++l)
        for (int f : layer_seq[l]) {
            facets.push_back(search.facets[f]);
            layer_of.push_back(static_cast<int>(l));
        }
    std::vector<std::size_t> order(facets.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return facets[a] < facets[b]; });
    std::vector<Multiset> sf;
    std::vector<int> sl;
    for (auto idx : order) {
        sf.push_back(facets[idx]);
        sl.push_back(layer_of[idx]);
    }
    result.witness = make_layered(PureMulticomplex(n, d, std::move(sf)), std::move(sl));
    return result;
}

LayeredMulticomplex multicomplex_to_complex(const LayeredMulticomplex& m) {
    int n = m.base.n, d = m.base.d;
    std::vector<Multiset> facets;
    for (const auto& f : m.base.facets) {
        Multiset image(n * d, 0);
        for (int v = 0; v < n; ++v)
            for (int rep = 0; rep < f[v]; ++rep) image[v * d + rep] = 1;
        facets.push_back(std::move(image));
    }
    std::vector<int> layers = m.layer_of;
    std::vector<std::size_t> order(facets.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return facets[a] < facets[b]; });
    std::vector<Multiset> sf;
    std::vector<int> sl;
    for (auto idx : order) {
        sf.push_back(facets[idx]);
        sl.push_back(layers[idx]);
    }
    return make_layered(PureMulticomplex(n * d, d, std::move(sf)), std::move(sl));
}

PureComplex as_complex(const PureMulticomplex& m) {
    std::vector<Facet> facets;
    for (const auto& ms : m.facets) {
        Facet f;
        for (int v = 0; v < m.n; ++v) {
            if (ms[v] > 1) throw InputError("as_complex: exponent > 1");
            if (ms[v] == 1) f.push_back(v);
        }
        facets.push_back(std::move(f));
    }
    return PureComplex(m.n, m.d, std::move(facets));
}

LayeredMulticomplex random_clm(int n, int d, std::mt19937_64& rng, int max_layers) {
    auto universe = complete_multicomplex(n, d).facets;
    auto divisors = [&](const Multiset& f) {
        std::vector<Multiset> out;
        Multiset cur(f.size(), 0);
        while (true) {
            std::size_t i = 0;
            while (i < f.size() && cur[i] == f[i]) {
                cur[i] = 0;
                ++i;
            }
            if (i == f.size()) break;
            cur[i] += 1;
            out.push_back(cur);
        }
        return out;
    };
    std::set<Multiset> closed;
    std::set<std::size_t> used;
    std::vector<std::vector<std::size_t>> layer_seq;
    std::vector<Multiset> prev_faces_list;

    int target = 1 + static_cast<int>(rng() % max_layers);
    for (int l = 0; l < target; ++l) {
        std::vector<std::size_t> avail;
        for (std::size_t i = 0; i < universe.size(); ++i) {
            if (used.count(i)) continue;
            bool ok = true;
            for (const auto& s : divisors(universe[i]))
                if (closed.count(s)) {
                    ok = false;
                    break;
                }
            if (ok) avail.push_back(i);
        }
        if (avail.empty()) break;
        std::vector<std::size_t> layer;
        for (std::size_t idx : avail)
            if (rng() % 3 == 0) layer.push_back(idx);
        if (layer.empty()) layer.push_back(avail[rng() % avail.size()]);
        // Close faces of the previous layer that this layer dropped.
        std::set<Multiset> kept;
        for (std::size_t idx : layer)
            for (const auto& s : divisors(universe[idx])) kept.insert(s);
        for (const auto& s : prev_faces_list)
            if (!kept.count(s)) closed.insert(s);
        prev_faces_list.clear();
        for (const auto& s : kept) prev_faces_list.push_back(s);
        for (std::size_t idx : layer) used.insert(idx);
        layer_seq.push_back(layer);
    }

    std::vector<Multiset> facets;
    std::vector<int> layer_of;
    for (std::size_t l = 0; l < layer_seq.size(); ++l)
        for (std::size_t idx : layer_seq[l]) {
            facets.push_back(universe[idx]);
            layer_of.push_back(static_cast<int>(l));
        }
    std::vector<std::size_t> order(facets.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return facets[a] < facets[b]; });
    std::vector<Multiset> sf;
    std::vector<int> sl;
    for (auto idx : order) {
        sf.push_back(facets[idx]);
        sl.push_back(layer_of[idx]);
    }
    return make_layered(PureMulticomplex(n, d, std::move(sf)), std::move(sl));
}

}  // namespace dlab

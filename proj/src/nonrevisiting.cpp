#include "diameterlab/nonrevisiting.hpp"

#include <algorithm>

#include "diameterlab/complex_ops.hpp"

namespace dlab {

namespace {

int vdist_facet(const PureComplex& c, const Facet& from, const Facet& to) {
    return vertex_distance(c, from, to);
}

// vdist from a single vertex to a set, -1 if unreachable.
int vdist_vertex(const PureComplex& c, int v, const Facet& target) {
    return vertex_distance(c, Facet{v}, target);
}

SegmentCertificate segment_impl(const PureComplex& c, const Facet& x_facet, const Facet& target,
                                int anchor);

// Case 2 body: recurse in the link of the anchor toward the vertices one step
// closer to the target, rejoin the anchor, then continue from the pivot.
SegmentCertificate segment_general(const PureComplex& c, const Facet& x_facet,
                                   const Facet& target, int anchor, int delta) {
    auto dist_to_target = vertex_distances_from(c, target);
    auto dist_to_anchor = vertex_distances_from(c, Facet{anchor});
    Facet z_set;
    for (int v = 0; v < c.n; ++v)
        if (dist_to_anchor[v] == 1 && dist_to_target[v] == delta - 1) z_set.push_back(v);
    if (z_set.empty())
        throw DisconnectedError("combinatorial_segment: no vertex advances toward the target");

    PureComplex lk = link(c, Facet{anchor});
    Facet x_rest = set_minus(x_facet, Facet{anchor});
    // Anchor for the link recursion: least vertex of X\x realizing the
    // vertex distance to the target set inside the link.
    int sub_anchor = -1;
    int best = -1;
    for (int v : x_rest) {
        int dv = vertex_distance(lk, Facet{v}, z_set);
        if (dv < 0) continue;
        if (best < 0 || dv < best) {
            best = dv;
            sub_anchor = v;
        }
    }
    if (sub_anchor < 0) throw DisconnectedError("combinatorial_segment: link recursion stuck");

    SegmentCertificate head = segment_impl(lk, x_rest, z_set, sub_anchor);

    SegmentCertificate cert;
    cert.target = target;
    cert.anchor = anchor;
    for (const auto& f : head.path) cert.path.push_back(set_union(f, Facet{anchor}));

    int pivot_index = static_cast<int>(cert.path.size()) - 1;
    const Facet& pivot_facet = cert.path[pivot_index];
    // The pivot step introduces exactly one vertex; it is the one at distance
    // delta-1 from the target.
    Facet prev = cert.path[pivot_index - 1];
    Facet fresh = set_minus(pivot_facet, prev);
    if (fresh.size() != 1) throw std::logic_error("combinatorial_segment: pivot step not simple");
    int pivot_vertex = fresh[0];

    SegmentCertificate tail = segment_impl(c, pivot_facet, target, pivot_vertex);

    cert.trace = std::make_unique<SegmentTrace>();
    cert.trace->case_tag = 2;
    cert.trace->anchor = anchor;
    cert.trace->pivot_index = pivot_index;
    cert.trace->pivot_vertex = pivot_vertex;
    cert.trace->head = std::move(head.trace);
    cert.trace->tail = std::move(tail.trace);
    for (std::size_t i = 1; i < tail.path.size(); ++i) cert.path.push_back(tail.path[i]);
    return cert;
}

SegmentCertificate segment_impl(const PureComplex& c, const Facet& x_facet, const Facet& target,
                                int anchor) {
    int dx = vdist_facet(c, x_facet, target);
    int da = vdist_vertex(c, anchor, target);
    if (dx < 0 || da < 0) throw DisconnectedError("combinatorial_segment: target unreachable");
    if (dx != da)
        throw BadAnchorError("combinatorial_segment: anchor does not realize vdist(X,S)");
    if (!std::binary_search(x_facet.begin(), x_facet.end(), anchor))
        throw BadAnchorError("combinatorial_segment: anchor not in the start facet");

    SegmentCertificate cert;
    cert.target = target;
    cert.anchor = anchor;
    if (dx == 0) {
        cert.path = {x_facet};
        cert.trace = std::make_unique<SegmentTrace>();
        cert.trace->case_tag = 0;
        cert.trace->anchor = anchor;
        return cert;
    }
    if (c.d == 1) {
        int v = -1;
        for (int u : target)
            if (is_face(c, Facet{u}) && (v < 0 || u < v)) v = u;
        if (v < 0) throw DisconnectedError("combinatorial_segment: no target vertex in complex");
        cert.path = {x_facet, Facet{v}};
        cert.trace = std::make_unique<SegmentTrace>();
        cert.trace->case_tag = 1;
        cert.trace->anchor = anchor;
        return cert;
    }
    return segment_general(c, x_facet, target, anchor, dx);
}

}  // namespace

SegmentCertificate combinatorial_segment(const PureComplex& c, const Facet& x_facet,
                                         const Facet& target, int anchor, bool check_normal) {
    Facet x = x_facet;
    std::sort(x.begin(), x.end());
    Facet s = target;
    std::sort(s.begin(), s.end());
    if (!std::binary_search(c.facets.begin(), c.facets.end(), x))
        throw InputError("combinatorial_segment: start is not a facet");
    if (check_normal && !is_normal(c))
        throw NotNormalError("combinatorial_segment: complex is not normal");
    return segment_impl(c, x, s, anchor);
}

namespace {

bool check_trace(const PureComplex& c, const std::vector<Facet>& path, const Facet& target,
                 int anchor, const SegmentTrace* trace) {
    if (!trace || path.empty()) return false;
    int dx = vertex_distance(c, path.front(), target);
    int da = vertex_distance(c, Facet{anchor}, target);
    if (dx != da) return false;  // anchor must realize the facet distance
    if (!std::binary_search(path.front().begin(), path.front().end(), anchor)) return false;

    // Weakly decreasing distance along the path, and only the last facet
    // meets the target.
    int prev = -1;
    for (std::size_t i = 0; i < path.size(); ++i) {
        int di = vertex_distance(c, path[i], target);
        if (prev >= 0 && di > prev) return false;
        prev = di;
        bool meets = set_intersect(path[i], target).size() > 0;
        if (meets != (i + 1 == path.size())) return false;
    }
    // Consecutive facets share a ridge.
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (set_difference_size(path[i], path[i + 1]) != 1) return false;

    switch (trace->case_tag) {
        case 0:
            return path.size() == 1 && dx == 0;
        case 1:
            return c.d == 1 && path.size() == 2 && dx > 0;
        case 2: {
            if (dx == 0 || c.d <= 1) return false;
            int k = trace->pivot_index;
            if (k < 1 || k >= static_cast<int>(path.size())) return false;
            // Head part stays in the star of the anchor.
            for (int i = 0; i <= k; ++i)
                if (!std::binary_search(path[i].begin(), path[i].end(), trace->anchor))
                    return false;
            // The pivot introduces the pivot vertex, one step closer to S.
            Facet fresh = set_minus(path[k], path[k - 1]);
            if (fresh.size() != 1 || fresh[0] != trace->pivot_vertex) return false;
            if (vertex_distance(c, Facet{trace->pivot_vertex}, target) != dx - 1) return false;
            for (int i = 0; i < k; ++i)
                if (vertex_distance(c, path[i], target) != dx) return false;

            // Head recursion replay in the link of the anchor.
            PureComplex lk = link(c, Facet{trace->anchor});
            std::vector<Facet> head_path;
            for (int i = 0; i <= k; ++i)
                head_path.push_back(set_minus(path[i], Facet{trace->anchor}));
            auto dist_to_target = vertex_distances_from(c, target);
            auto dist_to_anchor = vertex_distances_from(c, Facet{trace->anchor});
            Facet z_set;
            for (int v = 0; v < c.n; ++v)
                if (dist_to_anchor[v] == 1 && dist_to_target[v] == dx - 1) z_set.push_back(v);
            int head_anchor = trace->head ? trace->head->anchor : -1;
            if (!check_trace(lk, head_path, z_set, head_anchor, trace->head.get())) return false;

            // Tail replay from the pivot facet.
            std::vector<Facet> tail_path(path.begin() + k, path.end());
            return check_trace(c, tail_path, target, trace->pivot_vertex, trace->tail.get());
        }
        default:
            return false;
    }
}

// Star-membership property of the head part on flag complexes: any vertex at
// distance one from the pivot vertex that appears in the head part stays in
// every facet from there to the pivot.
bool check_star_membership(const PureComplex& c, const std::vector<Facet>& path,
                           const SegmentTrace* trace) {
    if (!trace || trace->case_tag != 2) return true;
    int k = trace->pivot_index;
    auto dist_from_pivot = vertex_distances_from(c, Facet{trace->pivot_vertex});
    for (int l = 0; l <= k; ++l)
        for (int z : path[l]) {
            if (dist_from_pivot[z] != 1) continue;
            for (int i = l; i <= k; ++i)
                if (!std::binary_search(path[i].begin(), path[i].end(), z)) return false;
        }
    std::vector<Facet> tail_path(path.begin() + k, path.end());
    return check_star_membership(c, tail_path, trace->tail.get());
}

}  // namespace

bool segment_monotone_check(const PureComplex& c, const SegmentCertificate& cert) {
    if (!check_trace(c, cert.path, cert.target, cert.anchor, cert.trace.get())) return false;
    if (is_flag(c) && !check_star_membership(c, cert.path, cert.trace.get())) return false;
    return true;
}

namespace {

std::vector<Facet> nr_path_rec(const PureComplex& c, const Facet& from, const Facet& to) {
    if (from == to) return {from};
    Facet common = set_intersect(from, to);
    if (!common.empty()) {
        int v = common.front();
        PureComplex lk = link(c, Facet{v});
        auto sub = nr_path_rec(lk, set_minus(from, Facet{v}), set_minus(to, Facet{v}));
        std::vector<Facet> out;
        for (const auto& f : sub) out.push_back(set_union(f, Facet{v}));
        return out;
    }
    // Disjoint: segment toward the target's vertex set, then recurse in the
    // star of a shared vertex.
    int anchor = -1, best = -1;
    auto dist_to_target = vertex_distances_from(c, to);
    for (int v : from) {
        if (dist_to_target[v] < 0) continue;
        if (best < 0 || dist_to_target[v] < best) {
            best = dist_to_target[v];
            anchor = v;
        }
    }
    if (anchor < 0) throw DisconnectedError("non_revisiting_path: target unreachable");
    SegmentCertificate seg = combinatorial_segment(c, from, to, anchor, false);
    const Facet& reached = seg.path.back();
    Facet meet = set_intersect(reached, to);
    int v = meet.front();
    PureComplex lk = link(c, Facet{v});
    auto sub = nr_path_rec(lk, set_minus(reached, Facet{v}), set_minus(to, Facet{v}));
    std::vector<Facet> out = seg.path;
    for (std::size_t i = 1; i < sub.size(); ++i) out.push_back(set_union(sub[i], Facet{v}));
    return out;
}

}  // namespace

std::vector<Facet> non_revisiting_path(const PureComplex& c, const Facet& from, const Facet& to,
                                       bool require_flag, bool check_preconditions) {
    Facet x = from, y = to;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (!std::binary_search(c.facets.begin(), c.facets.end(), x) ||
        !std::binary_search(c.facets.begin(), c.facets.end(), y))
        throw InputError("non_revisiting_path: endpoints must be facets");
    if (check_preconditions) {
        if (!is_normal(c)) throw NotNormalError("non_revisiting_path: complex is not normal");
        if (!is_flag(c)) {
            if (require_flag)
                throw NotFlagError("non_revisiting_path: complex is not flag (override available)");
        }
    }
    auto path = nr_path_rec(c, x, y);
    auto check = is_non_revisiting(path);
    if (!check.ok)
        throw NotFlagError("non_revisiting_path: revisit at (" + std::to_string(check.i) + "," +
                           std::to_string(check.j) + "," + std::to_string(check.k) +
                           "); flagness was needed");
    return path;
}

}  // namespace dlab

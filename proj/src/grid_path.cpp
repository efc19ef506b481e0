#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "diameterlab/constructions.hpp"

namespace dlab {

namespace {

using Cell = std::pair<int, int>;

bool grid_adjacent(const Cell& a, const Cell& b) {
    return std::abs(a.first - b.first) + std::abs(a.second - b.second) == 1;
}

bool is_induced_grid_path(const std::vector<Cell>& path) {
    for (std::size_t i = 0; i < path.size(); ++i)
        for (std::size_t j = i + 1; j < path.size(); ++j) {
            if (path[i] == path[j]) return false;
            bool adj = grid_adjacent(path[i], path[j]);
            if (adj != (j == i + 1)) return false;
        }
    return true;
}

std::vector<Cell> vertical_path(int l1, int l2) {
    std::vector<Cell> path;
    bool up = true;
    int last_row = 0;
    int i = 0;
    for (;; i += 2) {
        if (up) {
            for (int y = 0; y <= l2; ++y) path.emplace_back(i, y);
            last_row = l2;
        } else {
            for (int y = l2; y >= 0; --y) path.emplace_back(i, y);
            last_row = 0;
        }
        if (i + 2 > l1) break;
        path.emplace_back(i + 1, last_row);
        up = !up;
    }
    if (l1 % 2 == 1) path.emplace_back(l1, last_row);
    return path;
}

// The two-diagonal staircase {x+y in {c, c+1}} ordered top-left to
// bottom-right; merging by (x asc, y desc) is exactly the zig-zag walk.
std::vector<Cell> stripe_sequence(int c, int l1, int l2) {
    std::vector<Cell> cells;
    for (int diag : {c, c + 1})
        for (int x = std::max(0, diag - l2); x <= std::min(l1, diag); ++x)
            cells.emplace_back(x, diag - x);
    std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second > b.second;
    });
    return cells;
}

// Stripe snake for one diagonal phase. Joints between consecutive stripes
// drop as few staircase vertices as possible; a skipped-diagonal corner can
// make a joint free.
std::vector<Cell> stripe_zigzag(int l1, int l2, int phase, bool start_reversed) {
    std::vector<std::vector<Cell>> stripes;
    for (int c = phase; c + 1 <= l1 + l2; c += 3) {
        auto s = stripe_sequence(c, l1, l2);
        if (s.size() >= 2) stripes.push_back(std::move(s));
    }
    if (stripes.empty()) return {};

    std::vector<Cell> path;
    bool reversed = start_reversed;
    {
        auto s = stripes[0];
        if (reversed) std::reverse(s.begin(), s.end());
        path = s;
    }
    for (std::size_t t = 0; t + 1 < stripes.size(); ++t) {
        reversed = !reversed;
        auto entry_seq = stripes[t + 1];
        if (reversed) std::reverse(entry_seq.begin(), entry_seq.end());
        int skip_diag = phase + static_cast<int>(t) * 3 + 2;

        std::vector<Cell> connectors;
        for (int x = std::max(0, skip_diag - l2); x <= std::min(l1, skip_diag); ++x)
            connectors.emplace_back(x, skip_diag - x);

        int best_de = -1, best_dn = -1;
        Cell best_u{-1, -1};
        for (int total = 0; total <= 8 && best_de < 0; ++total)
            for (int de = 0; de <= std::min(total, 4) && best_de < 0; ++de) {
                int dn = total - de;
                if (dn > 4) continue;
                if (de + 2 > static_cast<int>(path.size())) continue;
                if (dn + 1 > static_cast<int>(entry_seq.size())) continue;
                Cell a = path[path.size() - 1 - de];
                Cell b = entry_seq[dn];
                for (const Cell& u : connectors) {
                    if (!grid_adjacent(u, a) || !grid_adjacent(u, b)) continue;
                    bool chord = false;
                    for (std::size_t i = 0; i + de + 1 < path.size() && !chord; ++i)
                        if (grid_adjacent(u, path[i])) chord = true;
                    for (std::size_t i = dn + 1; i < entry_seq.size() && !chord; ++i)
                        if (grid_adjacent(u, entry_seq[i])) chord = true;
                    if (chord) continue;
                    best_de = de;
                    best_dn = dn;
                    best_u = u;
                    break;
                }
            }
        if (best_de < 0) return {};
        path.resize(path.size() - best_de);
        path.push_back(best_u);
        path.insert(path.end(), entry_seq.begin() + best_dn, entry_seq.end());
    }
    if (!is_induced_grid_path(path)) return {};
    return path;
}

// Bounded exhaustive extension search used to polish the stripe snake: DFS
// over induced-path extensions with most-constrained-first ordering.
struct SnakeDfs {
    int w, h;  // columns, rows
    long long budget;
    long long nodes = 0;
    std::vector<int> adjcnt;
    std::vector<char> visited;
    std::vector<int> path;
    std::vector<int> best;

    SnakeDfs(int l1, int l2, long long b)
        : w(l1 + 1), h(l2 + 1), budget(b), adjcnt(w * h, 0), visited(w * h, 0) {}

    std::vector<int> neighbors(int v) const {
        std::vector<int> out;
        int x = v % w, y = v / w;
        if (x > 0) out.push_back(v - 1);
        if (x + 1 < w) out.push_back(v + 1);
        if (y > 0) out.push_back(v - w);
        if (y + 1 < h) out.push_back(v + w);
        return out;
    }

    void push(int v) {
        visited[v] = 1;
        for (int u : neighbors(v)) ++adjcnt[u];
        path.push_back(v);
    }
    void pop() {
        int v = path.back();
        path.pop_back();
        for (int u : neighbors(v)) --adjcnt[u];
        visited[v] = 0;
    }

    bool dfs() {
        if (++nodes > budget) return false;
        if (path.size() > best.size()) best = path;
        int head = path.back();
        std::vector<std::pair<int, int>> cands;
        for (int u : neighbors(head))
            if (!visited[u] && adjcnt[u] == 1) {
                int freedom = 0;
                for (int z : neighbors(u))
                    if (!visited[z] && adjcnt[z] == 0) ++freedom;
                cands.emplace_back(freedom, u);
            }
        std::sort(cands.begin(), cands.end());
        for (auto [f, u] : cands) {
            push(u);
            if (!dfs()) return false;
            pop();
        }
        return true;
    }

    std::vector<Cell> run(const std::vector<int>& starts) {
        for (int s : starts) {
            if (nodes > budget) break;
            push(s);
            dfs();
            pop();
        }
        std::vector<Cell> out;
        for (int v : best) out.emplace_back(v % w, v / w);
        return out;
    }
};

}  // namespace

std::vector<Cell> product_induced_path(int l1, int l2, GridStrategy strategy) {
    if (l1 < 1 || l2 < 1) throw InputError("product_induced_path: l1,l2 >= 1");
    if (strategy == GridStrategy::vertical) return vertical_path(l1, l2);

    std::vector<Cell> best;
    for (int phase = 0; phase < 3; ++phase)
        for (bool rev : {false, true}) {
            auto cand = stripe_zigzag(l1, l2, phase, rev);
            if (cand.size() > best.size()) best = cand;
        }
    {
        // Deterministic polish: a budgeted induced-path DFS from each corner.
        long long budget = static_cast<long long>(scaled_cap(4'000'000));
        SnakeDfs dfs(l1, l2, budget);
        int w = l1 + 1, h = l2 + 1;
        auto cand = dfs.run({0, w - 1, w * (h - 1), w * h - 1});
        if (cand.size() > best.size() && is_induced_grid_path(cand)) best = cand;
    }
    if (best.empty()) best = vertical_path(l1, l2);
    if (!is_induced_grid_path(best)) throw std::logic_error("zigzag: produced a chord");
    return best;
}

}  // namespace dlab

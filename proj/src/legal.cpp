#include "diameterlab/legal.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace dlab {

namespace {

bool convex(const std::vector<std::uint32_t>& sets) {
    int N = static_cast<int>(sets.size());
    for (int i = 0; i < N; ++i)
        for (int k = i + 2; k < N; ++k) {
            std::uint32_t common = sets[i] & sets[k];
            for (int j = i + 1; j < k; ++j)
                if ((common & sets[j]) != common) return false;
        }
    return true;
}

std::vector<std::uint32_t> relabel_used(const std::vector<std::uint32_t>& sets, int n, int& n_out) {
    std::uint32_t used = 0;
    for (std::uint32_t s : sets) used |= s;
    std::vector<int> map(n, -1);
    int next = 0;
    for (int e = 0; e < n; ++e)
        if (used & (1u << e)) map[e] = next++;
    n_out = next;
    std::vector<std::uint32_t> out;
    out.reserve(sets.size());
    for (std::uint32_t s : sets) {
        std::uint32_t t = 0;
        for (int e = 0; e < n; ++e)
            if (s & (1u << e)) t |= 1u << map[e];
        out.push_back(t);
    }
    return out;
}

std::pair<int, std::vector<std::uint32_t>> canonical_key(const std::vector<std::uint32_t>& sets,
                                                         int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::uint32_t> best = sets;
    bool have = false;
    do {
        std::vector<std::uint32_t> img;
        img.reserve(sets.size());
        for (std::uint32_t s : sets) {
            std::uint32_t t = 0;
            for (int e = 0; e < n; ++e)
                if (s & (1u << e)) t |= 1u << perm[e];
            img.push_back(t);
        }
        if (!have || img < best) {
            best = img;
            have = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {n, best};
}

bool legal_rec(std::vector<std::uint32_t> sets, int n, LegalMemo& memo, int n_cap, int len_cap);

// Existential over per-position subsets of S_i \ {a}, smallest-first.
bool shrink_exists(const std::vector<std::uint32_t>& sets, int n, int a, LegalMemo& memo,
                   int n_cap, int len_cap) {
    int N = static_cast<int>(sets.size());
    std::vector<std::vector<std::uint32_t>> choices(N);
    for (int i = 0; i < N; ++i) {
        std::uint32_t rest = sets[i] & ~(1u << a);
        std::vector<std::uint32_t> subs;
        for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
            subs.push_back(sub);
            if (sub == 0) break;
        }
        std::sort(subs.begin(), subs.end(), [](std::uint32_t x, std::uint32_t y) {
            int px = __builtin_popcount(x), py = __builtin_popcount(y);
            if (px != py) return px < py;
            return x < y;
        });
        choices[i] = std::move(subs);
    }
    std::vector<std::uint32_t> pick(N, 0);
    auto drop_element = [&](const std::vector<std::uint32_t>& cand) {
        std::vector<std::uint32_t> reduced;
        reduced.reserve(N);
        for (std::uint32_t s : cand) {
            std::uint32_t t = 0;
            for (int e = 0; e < n; ++e) {
                if (e == a) continue;
                int shifted = e < a ? e : e - 1;
                if (s & (1u << e)) t |= 1u << shifted;
            }
            reduced.push_back(t);
        }
        return reduced;
    };
    std::function<bool(int)> dfs = [&](int pos) -> bool {
        if (pos == N) return legal_rec(drop_element(pick), n - 1, memo, n_cap, len_cap);
        for (std::uint32_t choice : choices[pos]) {
            pick[pos] = choice;
            bool ok = true;  // convexity on the chosen prefix
            for (int i = 0; i < pos - 1 && ok; ++i) {
                std::uint32_t common = pick[i] & pick[pos];
                for (int j = i + 1; j < pos && ok; ++j)
                    if ((common & pick[j]) != common) ok = false;
            }
            if (ok && dfs(pos + 1)) return true;
        }
        return false;
    };
    return dfs(0);
}

bool legal_rec(std::vector<std::uint32_t> sets, int n, LegalMemo& memo, int n_cap, int len_cap) {
    if (n == 0) return sets.size() == 1 && sets[0] == 0;
    if (sets.empty()) return false;
    if (n > n_cap || static_cast<int>(sets.size()) > len_cap)
        throw SizeLimitError("legal_check: cap exceeded (n <= " + std::to_string(n_cap) +
                             ", N <= " + std::to_string(len_cap) + ")");

    // Unused elements reduce the universe first.
    std::uint32_t used = 0;
    for (std::uint32_t s : sets) used |= s;
    if (used != (1u << n) - 1) {
        int n2 = 0;
        auto reduced = relabel_used(sets, n, n2);
        return legal_rec(reduced, n2, memo, n_cap, len_cap);
    }

    auto key = canonical_key(sets, n);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    bool ok = convex(sets);

    // Every proper nonempty subsequence must be legal.
    int N = static_cast<int>(sets.size());
    for (std::uint32_t mask = 1; ok && mask + 1 < (1u << N); ++mask) {
        std::vector<std::uint32_t> sub;
        for (int i = 0; i < N; ++i)
            if (mask & (1u << i)) sub.push_back(sets[i]);
        if (!legal_rec(sub, n, memo, n_cap, len_cap)) ok = false;
    }

    // Every element common to all sets must admit a legal shrink.
    if (ok) {
        std::uint32_t common = ~0u;
        for (std::uint32_t s : sets) common &= s;
        for (int a = 0; a < n && ok; ++a)
            if (common & (1u << a))
                if (!shrink_exists(sets, n, a, memo, n_cap, len_cap)) ok = false;
    }

    memo[key] = ok;
    return ok;
}

}  // namespace

bool legal_check(const LegalSequence& seq, LegalMemo& memo, int n_cap, int len_cap) {
    for (std::uint32_t s : seq.sets)
        if (s >= (1u << seq.n)) throw InputError("legal_check: element outside [n]");
    return legal_rec(seq.sets, seq.n,
                     memo, static_cast<int>(scaled_cap(n_cap)),
                     static_cast<int>(scaled_cap(len_cap)));
}

LegalSequence legal_double(const LegalSequence& seq, int i) {
    if (i < 1) throw InputError("legal_double: i >= 1");
    int m = seq.length();
    if (m == 0) throw InputError("legal_double: empty sequence");
    int half = seq.n + i;
    if (2 * half > 30) throw SizeLimitError("legal_double: ground set too large");
    LegalSequence out;
    out.n = 2 * half;
    std::uint32_t A = (1u << half) - 1;
    std::uint32_t B = ((1u << half) - 1) << half;
    for (int t = 0; t < m; ++t) out.sets.push_back(A);
    for (int t = 0; t < (i - 1) * m; ++t) out.sets.push_back(A | B);
    for (int t = 0; t < m; ++t) out.sets.push_back(B);
    return out;
}

}  // namespace dlab

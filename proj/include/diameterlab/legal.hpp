#ifndef DIAMETERLAB_LEGAL_HPP
#define DIAMETERLAB_LEGAL_HPP

#include <cstdint>
#include <map>

#include "diameterlab/types.hpp"

namespace dlab {

// Support sequence S_1..S_N of subsets of [n], sets as bitmasks. Length is
// the number of sets.
struct LegalSequence {
    int n = 0;
    std::vector<std::uint32_t> sets;

    int length() const { return static_cast<int>(sets.size()); }
};

// Memo shared across calls; key is the relabel-canonical sequence.
using LegalMemo = std::map<std::pair<int, std::vector<std::uint32_t>>, bool>;

// Full recursive check of the support-sequence axioms: the base sequence on 0
// elements, convexity, legality of every proper subsequence, removal of
// unused elements, and an existential shrink for every element common to all
// sets. Hard caps (n <= 4, N <= 8 by default, scaled) guard the double
// recursion; SizeLimit beyond them.
bool legal_check(const LegalSequence& seq, LegalMemo& memo, int n_cap = 4, int len_cap = 8);

// Doubling: blocks (A..A, AuB..AuB, B..B) of sizes m, (i-1)m, m with
// |A| = |B| = n+i disjoint, on 2(n+i) elements; total length (i+1)m.
LegalSequence legal_double(const LegalSequence& seq, int i);

}  // namespace dlab

#endif

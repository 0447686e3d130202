#pragma once

#include <vector>

#include "pathmn/partial_perm.hpp"
#include "pathmn/symfunc.hpp"

namespace pathmn {

// Sum of p_{cyc(w)} over all completions w of (I,J). Guard: n <= 9 unless PATHMN_MAX_N overrides.
SymExpansion brute_atomic(const PartialPermutation& pp);

// chi^lam_alpha by bumping the exponent vector delta = (N-1,...,0), N = |lam|, once per part of alpha.
Int alternant_char(const Partition& lam, const Composition& alpha);

// Words over letters 1..r; letter a carries weight mu[a-1].
struct WordArray {
    std::vector<std::vector<int>> words;
};

struct UnstablePair {
    int i = 0;     // 1-based positions, i < j
    int j = 0;
    int cutI = 0;  // prefix lengths: w_i = u_i v_i with |u_i| = cutI
    int cutJ = 0;
    int score = 0;
};

std::vector<int> weight(const WordArray& w, const std::vector<int>& mu);
// All unstable pairs, ordered by (i, j, cutI, cutJ).
std::vector<UnstablePair> unstable_pairs(const WordArray& w, const std::vector<int>& mu);
bool is_stable(const WordArray& w, const std::vector<int>& mu);
// Interchanges the prefixes u_i and u_j.
WordArray swap_pair(const WordArray& w, const UnstablePair& p);

// Schur expansion from standard mu-word arrays of length N; with stableOnly, unstable arrays are skipped first.
// Guards: len(mu) <= 5, N <= 8.
SymExpansion word_array_path_expansion(const Partition& mu, int N, bool stableOnly = true);

}  // namespace pathmn

#include "pathmn/oracles.hpp"

#include <algorithm>
#include <map>
#include <functional>
#include <numeric>

namespace pathmn {

SymExpansion brute_atomic(const PartialPermutation& pp) {
    int n = pp.n;
    if (n > guard_limit(9)) throw GuardError("brute_atomic: n exceeds guard (would enumerate (n-k)! completions)");
    std::vector<int> w(n + 1, 0);
    std::vector<char> usedTarget(n + 1, 0);
    for (int p = 0; p < pp.k(); ++p) {
        w[pp.I[p]] = pp.J[p];
        usedTarget[pp.J[p]] = 1;
    }
    std::vector<int> freeSources, freeTargets;
    for (int v = 1; v <= n; ++v) {
        if (w[v] == 0) freeSources.push_back(v);
        if (!usedTarget[v]) freeTargets.push_back(v);
    }
    std::map<Partition, long long, PartitionOrder> census;
    std::vector<char> seen(n + 1);
    do {
        for (size_t t = 0; t < freeSources.size(); ++t) w[freeSources[t]] = freeTargets[t];
        std::fill(seen.begin(), seen.end(), 0);
        Partition cyc;
        for (int v = 1; v <= n; ++v) {
            if (seen[v]) continue;
            int len = 0;
            for (int u = v; !seen[u]; u = w[u]) {
                seen[u] = 1;
                ++len;
            }
            cyc.push_back(len);
        }
        std::sort(cyc.begin(), cyc.end(), std::greater<int>());
        ++census[cyc];
    } while (std::next_permutation(freeTargets.begin(), freeTargets.end()));
    SymExpansion out(Basis::Power, n);
    for (const auto& [mu, c] : census) out.add(mu, Rat(Int(std::to_string(c))));
    return out;
}

namespace {

// Sorts v into strictly decreasing order; returns 0 on a repeated entry, else the sign of the sort.
int sort_with_sign(std::vector<int>& v) {
    int inversions = 0;
    for (size_t a = 0; a < v.size(); ++a)
        for (size_t b = a + 1; b < v.size(); ++b) {
            if (v[a] == v[b]) return 0;
            if (v[a] < v[b]) ++inversions;
        }
    std::sort(v.begin(), v.end(), std::greater<int>());
    return (inversions % 2) ? -1 : 1;
}

}  // namespace

Int alternant_char(const Partition& lam, const Composition& alpha) {
    if (degree(lam) != degree(alpha)) throw std::invalid_argument("alternant_char: size mismatch");
    int N = degree(lam);
    std::vector<int> delta(N);
    for (int i = 0; i < N; ++i) delta[i] = N - 1 - i;
    std::map<std::vector<int>, Int> states{{delta, Int(1)}};
    for (int a : alpha) {
        std::map<std::vector<int>, Int> next;
        for (const auto& [v, c] : states)
            for (int i = 0; i < N; ++i) {
                std::vector<int> u = v;
                u[i] += a;
                int s = sort_with_sign(u);
                if (s == 0) continue;
                if (s > 0) next[u] += c;
                else next[u] -= c;
            }
        states.swap(next);
    }
    std::vector<int> target(N);
    for (int i = 0; i < N; ++i) target[i] = (i < static_cast<int>(lam.size()) ? lam[i] : 0) + N - 1 - i;
    auto it = states.find(target);
    return it == states.end() ? Int(0) : it->second;
}

std::vector<int> weight(const WordArray& w, const std::vector<int>& mu) {
    int N = static_cast<int>(w.words.size());
    std::vector<int> wt(N);
    for (int i = 0; i < N; ++i) {
        int s = 0;
        for (int letter : w.words[i]) s += mu.at(letter - 1);
        wt[i] = s + N - 1 - i;
    }
    return wt;
}

std::vector<UnstablePair> unstable_pairs(const WordArray& w, const std::vector<int>& mu) {
    int N = static_cast<int>(w.words.size());
    // suffix weights: suf[i][c] = weight of w_i with the first c letters removed
    std::vector<std::vector<int>> suf(N);
    for (int i = 0; i < N; ++i) {
        const auto& word = w.words[i];
        suf[i].assign(word.size() + 1, 0);
        for (int c = static_cast<int>(word.size()) - 1; c >= 0; --c) suf[i][c] = suf[i][c + 1] + mu.at(word[c] - 1);
    }
    std::vector<UnstablePair> out;
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) {
            int li = static_cast<int>(w.words[i].size()), lj = static_cast<int>(w.words[j].size());
            for (int ci = 0; ci <= li; ++ci)
                for (int cj = 0; cj <= lj; ++cj) {
                    if (ci == li && cj == lj) continue;  // both suffixes empty
                    int si = suf[i][ci] - (i + 1), sj = suf[j][cj] - (j + 1);
                    if (si == sj) out.push_back({i + 1, j + 1, ci, cj, si});
                }
        }
    return out;
}

bool is_stable(const WordArray& w, const std::vector<int>& mu) { return unstable_pairs(w, mu).empty(); }

WordArray swap_pair(const WordArray& w, const UnstablePair& p) {
    WordArray out = w;
    const auto& wi = w.words.at(p.i - 1);
    const auto& wj = w.words.at(p.j - 1);
    std::vector<int> ni(wj.begin(), wj.begin() + p.cutJ);
    ni.insert(ni.end(), wi.begin() + p.cutI, wi.end());
    std::vector<int> nj(wi.begin(), wi.begin() + p.cutI);
    nj.insert(nj.end(), wj.begin() + p.cutJ, wj.end());
    out.words[p.i - 1] = ni;
    out.words[p.j - 1] = nj;
    return out;
}

SymExpansion word_array_path_expansion(const Partition& mu, int N, bool stableOnly) {
    if (!is_partition(mu)) throw std::invalid_argument("word_array_path_expansion: expects a partition");
    // The guard counts letters (parts), so that the (3,2,1), N = 6 case stays in range.
    if (mu.size() > 5 || N > 8) throw GuardError("word_array_path_expansion: guard is len(mu) <= 5, N <= 8");
    if (N < degree(mu)) throw std::invalid_argument("word_array_path_expansion: need N >= |mu|");
    int r = static_cast<int>(mu.size());
    std::map<Partition, Int, PartitionOrder> acc;
    std::vector<int> order(r);
    std::iota(order.begin(), order.end(), 1);
    std::vector<int> lengths(N, 0);
    WordArray arr;
    arr.words.assign(N, {});
    auto emit = [&]() {
        int pos = 0;
        for (int i = 0; i < N; ++i) {
            arr.words[i].assign(order.begin() + pos, order.begin() + pos + lengths[i]);
            pos += lengths[i];
        }
        if (stableOnly && !is_stable(arr, mu)) return;
        std::vector<int> wt = weight(arr, mu);
        int s = sort_with_sign(wt);
        if (s == 0) return;
        Partition lam;
        for (int i = 0; i < N; ++i)
            if (wt[i] - (N - 1 - i) > 0) lam.push_back(wt[i] - (N - 1 - i));
        if (s > 0) acc[lam] += 1;
        else acc[lam] -= 1;
    };
    // lengths ranges over weak compositions of r into N parts
    std::function<void(int, int)> split = [&](int i, int left) {
        if (i == N - 1) {
            lengths[i] = left;
            emit();
            return;
        }
        for (int l = 0; l <= left; ++l) {
            lengths[i] = l;
            split(i + 1, left - l);
        }
    };
    do {
        if (N == 0) {
            if (r == 0) emit();
        } else {
            split(0, r);
        }
    } while (std::next_permutation(order.begin(), order.end()));
    SymExpansion out(Basis::Schur, degree(mu));
    for (const auto& [lam, c] : acc) out.add(lam, Rat(c));
    return out;
}

}  // namespace pathmn

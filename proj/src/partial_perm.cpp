#include "pathmn/partial_perm.hpp"

#include <algorithm>
#include <numeric>

namespace pathmn {

PartialPermutation make_pp(int n, std::vector<int> I, std::vector<int> J) {
    if (n < 0) throw std::invalid_argument("negative ambient size");
    if (I.size() != J.size()) throw std::invalid_argument("I and J differ in length");
    auto check = [n](const std::vector<int>& v, const char* name) {
        std::vector<char> seen(n + 1, 0);
        for (int x : v) {
            if (x < 1 || x > n) throw std::invalid_argument(std::string(name) + " entry out of range [1,n]");
            if (seen[x]) throw std::invalid_argument(std::string(name) + " entries not distinct");
            seen[x] = 1;
        }
    };
    check(I, "I");
    check(J, "J");
    return {n, std::move(I), std::move(J)};
}

PartialPermutation canonical(const PartialPermutation& pp) {
    std::vector<int> idx(pp.I.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return pp.I[a] < pp.I[b]; });
    PartialPermutation out{pp.n, {}, {}};
    for (int i : idx) {
        out.I.push_back(pp.I[i]);
        out.J.push_back(pp.J[i]);
    }
    return out;
}

GraphType decompose(const PartialPermutation& pp) {
    int n = pp.n;
    std::vector<int> next(n + 1, 0), prev(n + 1, 0);
    for (int p = 0; p < pp.k(); ++p) {
        next[pp.I[p]] = pp.J[p];
        prev[pp.J[p]] = pp.I[p];
    }
    std::vector<char> seen(n + 1, 0);
    GraphType g;
    // paths start at vertices with no incoming edge
    for (int v = 1; v <= n; ++v) {
        if (prev[v] != 0) continue;
        int len = 0;
        for (int u = v; u != 0; u = next[u]) {
            seen[u] = 1;
            ++len;
        }
        g.pathType.push_back(len);
    }
    // everything left lies on a cycle; walk from the least unseen vertex
    for (int v = 1; v <= n; ++v) {
        if (seen[v]) continue;
        int len = 0;
        int u = v;
        do {
            seen[u] = 1;
            ++len;
            u = next[u];
        } while (u != v);
        g.cycleType.push_back(len);
    }
    g.pathType = sort_partition(g.pathType);
    g.cycleType = sort_partition(g.cycleType);
    return g;
}

std::optional<IndicatorTerm> indicator_product(const IndicatorTerm& a, const IndicatorTerm& b) {
    if (a.pp.n != b.pp.n) throw std::invalid_argument("indicator_product: ambient sizes differ");
    int n = a.pp.n;
    std::vector<int> fwd(n + 1, 0), bwd(n + 1, 0);
    auto absorb = [&](const PartialPermutation& pp) {
        for (int p = 0; p < pp.k(); ++p) {
            int i = pp.I[p], j = pp.J[p];
            if (fwd[i] != 0 && fwd[i] != j) return false;
            if (bwd[j] != 0 && bwd[j] != i) return false;
            fwd[i] = j;
            bwd[j] = i;
        }
        return true;
    };
    if (!absorb(a.pp) || !absorb(b.pp)) return std::nullopt;
    IndicatorTerm out{a.coeff * b.coeff, {n, {}, {}}};
    for (int i = 1; i <= n; ++i)
        if (fwd[i] != 0) {
            out.pp.I.push_back(i);
            out.pp.J.push_back(fwd[i]);
        }
    return out;
}

PackedPair pack(const PartialPermutation& pp) {
    std::vector<int> labels(pp.I.begin(), pp.I.end());
    labels.insert(labels.end(), pp.J.begin(), pp.J.end());
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    PackedPair out;
    for (size_t t = 0; t < labels.size(); ++t) out.relabel[labels[t]] = static_cast<int>(t) + 1;
    out.pp.n = static_cast<int>(labels.size());
    for (int p = 0; p < pp.k(); ++p) {
        out.pp.I.push_back(out.relabel[pp.I[p]]);
        out.pp.J.push_back(out.relabel[pp.J[p]]);
    }
    return out;
}

PartialPermutation relabel(const PartialPermutation& pp, const std::vector<int>& w) {
    if (static_cast<int>(w.size()) != pp.n) throw std::invalid_argument("relabel: permutation size mismatch");
    PartialPermutation out{pp.n, {}, {}};
    for (int p = 0; p < pp.k(); ++p) {
        out.I.push_back(w[pp.I[p] - 1]);
        out.J.push_back(w[pp.J[p] - 1]);
    }
    return out;
}

Int local_dimension(int n, int k) {
    if (n < 1 || k < 0 || k > n - 1) throw std::invalid_argument("local_dimension: need 0 <= k <= n-1");
    Int total = 0;
    for (const auto& lam : partitions_of(n)) {
        if (lam[0] < n - k) continue;
        Int f = syt_count(lam);
        total += f * f;
    }
    return total;
}

int lis_length(const std::vector<int>& w) {
    std::vector<int> tails;
    for (int x : w) {
        auto it = std::lower_bound(tails.begin(), tails.end(), x);
        if (it == tails.end()) tails.push_back(x);
        else *it = x;
    }
    return static_cast<int>(tails.size());
}

Int lis_count_brute(int n, int k) {
    if (n > guard_limit(8)) throw GuardError("lis_count_brute: n exceeds guard");
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    Int count = 0;
    do {
        if (lis_length(w) >= n - k) ++count;
    } while (std::next_permutation(w.begin(), w.end()));
    return count;
}

PartialPermutation parse_pp(const std::string& text, int n) {
    size_t arrow = text.find("->");
    if (arrow == std::string::npos) throw ParseError("partial permutation must look like \"I->J\": \"" + text + "\"");
    std::vector<int> I = parse_parts(text.substr(0, arrow));
    std::vector<int> J = parse_parts(text.substr(arrow + 2));
    if (I.size() != J.size()) throw ParseError("I and J differ in length: \"" + text + "\"");
    try {
        return make_pp(n, I, J);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::string format_pp(const PartialPermutation& pp) {
    auto join = [](const std::vector<int>& v) {
        std::string s;
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(v[i]);
        }
        return s;
    };
    return join(pp.I) + "->" + join(pp.J);
}

}  // namespace pathmn

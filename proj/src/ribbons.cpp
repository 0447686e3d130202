#include "pathmn/ribbons.hpp"

#include <algorithm>
#include <mutex>
#include <tuple>

namespace pathmn {

namespace {

// Appends the additions of size r with tailCol > minCol and minRow <= tailRow <= maxRow.
// The tiling search skips the copy of the base shape.
void append_additions(const Partition& lam, int r, std::vector<RibbonAddition>& out, bool keepBase, int minCol = 0,
                      int minRow = 1, int maxRow = 1 << 30) {
    // Exponent vector lam + delta with enough rows for a ribbon to hang below lam.
    // Rows past len(lam) + r can never be reached, so N = len(lam) + r gives the same additions as N = |lam| + r.
    int N = static_cast<int>(lam.size()) + r;
    std::vector<int> beta(N);
    for (int i = 0; i < N; ++i) beta[i] = (i < static_cast<int>(lam.size()) ? lam[i] : 0) + (N - 1 - i);
    for (int i = std::max(0, minRow - 1); i < std::min(N, maxRow); ++i) {
        if ((i < static_cast<int>(lam.size()) ? lam[i] : 0) + 1 <= minCol) continue;
        int moved = beta[i] + r;
        bool collide = false;
        int p = 0;  // number of entries strictly above the moved value
        for (int j = 0; j < N; ++j) {
            if (j == i) continue;
            if (beta[j] == moved) {
                collide = true;
                break;
            }
            if (beta[j] > moved) ++p;
        }
        if (collide) continue;
        RibbonAddition a;
        if (keepBase) a.base = lam;
        a.size = r;
        a.tailRow = i + 1;
        a.tailCol = (i < static_cast<int>(lam.size()) ? lam[i] : 0) + 1;
        a.sign = ((i - p) % 2) ? -1 : 1;
        // sorted exponents after the move: beta[0..p), moved, beta[p..i), beta(i..N)
        a.result.reserve(lam.size() + 1);
        auto emit = [&](int value, int j) {
            if (value - (N - 1 - j) > 0) a.result.push_back(value - (N - 1 - j));
        };
        for (int j = 0; j < p; ++j) emit(beta[j], j);
        emit(moved, p);
        for (int j = p; j < i; ++j) emit(beta[j], j + 1);
        for (int j = i + 1; j < N; ++j) emit(beta[j], j);
        out.push_back(std::move(a));
    }
}

}  // namespace

std::vector<RibbonAddition> add_ribbons(const Partition& lam, int r) {
    if (r < 1) throw std::invalid_argument("add_ribbons: r must be positive");
    std::vector<RibbonAddition> out;
    append_additions(lam, r, out, true);
    return out;
}

std::vector<RibbonRemoval> remove_ribbons(const Partition& lam, int r) {
    if (r < 1) throw std::invalid_argument("remove_ribbons: r must be positive");
    int N = static_cast<int>(lam.size());
    std::vector<int> beta(N);
    for (int i = 0; i < N; ++i) beta[i] = lam[i] + (N - 1 - i);
    std::vector<RibbonRemoval> out;
    for (int i = 0; i < N; ++i) {
        int moved = beta[i] - r;
        if (moved < 0) continue;
        bool collide = false;
        int below = 0;  // entries after i that the moved value passes
        for (int j = 0; j < N; ++j) {
            if (j == i) continue;
            if (beta[j] == moved) {
                collide = true;
                break;
            }
            if (j > i && beta[j] > moved) ++below;
        }
        if (collide) continue;
        std::vector<int> nb;
        nb.reserve(N);
        for (int j = 0; j < N; ++j)
            if (j != i) nb.push_back(beta[j]);
        nb.insert(nb.begin() + i + below, moved);
        RibbonRemoval rem;
        rem.sign = (below % 2) ? -1 : 1;
        for (int j = 0; j < N; ++j) {
            int part = nb[j] - (N - 1 - j);
            if (part > 0) rem.result.push_back(part);
        }
        out.push_back(std::move(rem));
    }
    return out;
}

namespace {

using SkewKey = std::tuple<Partition, Partition, Composition>;

std::mutex g_cache_mutex;
std::map<SkewKey, Int> g_skew_cache;
std::map<Partition, std::map<Partition, Int, PartitionOrder>> g_vec_chi_cache;

Int skew_rec(const Partition& outer, const Partition& inner, const Composition& alpha) {
    if (alpha.empty()) return outer == inner ? Int(1) : Int(0);
    if (!contains(outer, inner)) return 0;
    SkewKey key{outer, inner, alpha};
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = g_skew_cache.find(key);
        if (it != g_skew_cache.end()) return it->second;
    }
    Composition rest(alpha.begin(), alpha.end() - 1);
    Int total = 0;
    for (const auto& rem : remove_ribbons(outer, alpha.back())) {
        if (!contains(rem.result, inner)) continue;
        Int v = skew_rec(rem.result, inner, rest);
        if (rem.sign > 0) total += v;
        else total -= v;
    }
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    g_skew_cache.emplace(std::move(key), total);
    return total;
}

}  // namespace

Int skew_mn(const SkewShape& shape, const Composition& alpha) {
    if (!is_partition(shape.outer) || !is_partition(shape.inner)) throw std::invalid_argument("skew_mn: shapes must be partitions");
    if (!is_composition(alpha)) throw std::invalid_argument("skew_mn: alpha must have positive parts");
    if (degree(shape.outer) - degree(shape.inner) != degree(alpha)) throw std::invalid_argument("skew_mn: size mismatch");
    return skew_rec(shape.outer, shape.inner, alpha);
}

void clear_ribbon_caches() {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    g_skew_cache.clear();
    g_vec_chi_cache.clear();
}

namespace {

// Shared depth-first search over monotonic tilings. counts[s] is the remaining budget of size-s ribbons;
// frozenOnly requires every tail below row 1; allNodes visits every prefix instead of only complete tilings.
struct TilingSearch {
    std::vector<int> counts;
    bool frozenOnly = false;
    bool allNodes = false;
    const std::function<void(const MonotonicTiling&)>* visit = nullptr;
    MonotonicTiling cur;
    int remaining = 0;

    void run() {
        cur = MonotonicTiling{};
        int maxDepth = 1;
        for (int c : counts) maxDepth += c;
        cur.chain.reserve(maxDepth);
        cur.type.reserve(maxDepth);
        cur.depth.reserve(maxDepth);
        cur.tailCols.reserve(maxDepth);
        cur.signs.reserve(maxDepth);
        cur.chain.push_back({});
        rec();
    }

    void rec() {
        if (allNodes || remaining == 0) (*visit)(cur);
        if (remaining == 0) return;
        const Partition& shape = cur.chain.back();
        int lastCol = cur.tailCols.empty() ? 0 : cur.tailCols.back();
        int lastRow = cur.depth.empty() ? 1 << 30 : cur.depth.back();
        std::vector<RibbonAddition> cands;
        for (int s = 1; s < static_cast<int>(counts.size()); ++s) {
            if (counts[s] == 0) continue;
            append_additions(shape, s, cands, false, lastCol, frozenOnly ? 2 : 1, lastRow);
        }
        std::sort(cands.begin(), cands.end(), [](const RibbonAddition& x, const RibbonAddition& y) {
            return std::tie(x.tailCol, x.size, x.tailRow) < std::tie(y.tailCol, y.size, y.tailRow);
        });
        for (auto& a : cands) {
            --counts[a.size];
            remaining -= allNodes ? 0 : a.size;
            cur.chain.push_back(std::move(a.result));
            cur.type.push_back(a.size);
            cur.depth.push_back(a.tailRow);
            cur.tailCols.push_back(a.tailCol);
            cur.signs.push_back(a.sign);
            int savedSign = cur.sign;
            cur.sign *= a.sign;
            rec();
            cur.sign = savedSign;
            cur.signs.pop_back();
            cur.tailCols.pop_back();
            cur.depth.pop_back();
            cur.type.pop_back();
            cur.chain.pop_back();
            remaining += allNodes ? 0 : a.size;
            ++counts[a.size];
        }
    }
};

}  // namespace

void enumerate_monotonic(const Partition& mu, const std::function<void(const MonotonicTiling&)>& visit) {
    if (!is_partition(mu)) throw std::invalid_argument("enumerate_monotonic: expects a partition");
    TilingSearch search;
    search.counts = multiplicities(mu);
    search.remaining = degree(mu);
    search.visit = &visit;
    search.run();
}

std::vector<MonotonicTiling> monotonic_tilings(const Partition& mu) {
    std::vector<MonotonicTiling> out;
    enumerate_monotonic(mu, [&](const MonotonicTiling& t) { out.push_back(t); });
    return out;
}

std::map<Partition, Int, PartitionOrder> vec_chi_all(const Partition& mu) {
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = g_vec_chi_cache.find(mu);
        if (it != g_vec_chi_cache.end()) return it->second;
    }
    std::map<Partition, Int, PartitionOrder> out;
    enumerate_monotonic(mu, [&](const MonotonicTiling& t) {
        Int& v = out[t.shape()];
        if (t.sign > 0) ++v;
        else --v;
    });
    for (auto it = out.begin(); it != out.end();) {
        if (it->second == 0) it = out.erase(it);
        else ++it;
    }
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    g_vec_chi_cache.emplace(mu, out);
    return out;
}

Int vec_chi(const Partition& lam, const Partition& mu) {
    if (degree(lam) != degree(mu)) throw std::invalid_argument("vec_chi: size mismatch");
    auto all = vec_chi_all(mu);
    auto it = all.find(lam);
    return it == all.end() ? Int(0) : it->second;
}

namespace {

void check_stable_input(const Partition& mu, int n) {
    if (!is_partition(mu)) throw std::invalid_argument("expects a partition");
    for (int p : mu)
        if (p < 2) throw std::invalid_argument("every part of mu must be at least 2");
    if (n < degree(mu)) throw std::invalid_argument("n must be at least |mu|");
}

void frozen_search(const Partition& mu, int n, const std::function<void(const MonotonicTiling&)>& visit) {
    check_stable_input(mu, n);
    TilingSearch search;
    search.counts = multiplicities(mu);
    if (search.counts.size() < 2) search.counts.resize(2, 0);
    search.counts[1] = n - degree(mu);
    search.frozenOnly = true;
    search.allNodes = true;
    search.remaining = 1;
    search.visit = &visit;
    search.run();
}

}  // namespace

std::vector<MonotonicTiling> frozen_set(const Partition& mu, int n) {
    std::vector<MonotonicTiling> out;
    frozen_search(mu, n, [&](const MonotonicTiling& t) { out.push_back(t); });
    return out;
}

SymExpansion stable_expansion(const Partition& mu, int n) {
    check_stable_input(mu, n);
    auto m = multiplicities(mu);
    int free1 = n - degree(mu);
    std::map<Partition, Int, PartitionOrder> acc;
    std::vector<int> rho;
    std::vector<long> bottom;
    frozen_search(mu, n, [&](const MonotonicTiling& t0) {
        rho.assign(std::max<size_t>(m.size(), 2), 0);
        for (int s : t0.type) ++rho[s];
        bottom.assign(1, static_cast<long>(free1 - rho[1]));
        for (size_t i = 2; i < m.size(); ++i) bottom.push_back(m[i] - rho[i]);
        // top entry n - |mu| + len(mu) - rho(T0) is the sum of the bottom entries
        Int ways = multinomial(bottom);
        Partition sigma = t0.shape();
        int extra = n - degree(sigma);
        if (sigma.empty()) sigma.push_back(extra);
        else sigma[0] += extra;
        if (sigma[0] == 0) sigma.clear();
        Int& v = acc[sigma];
        if (t0.sign > 0) v += ways;
        else v -= ways;
    });
    SymExpansion out(Basis::Schur, n);
    Int scale = factorial(free1) * mult_factorial(mu);
    for (const auto& [lam, c] : acc) out.add(lam, Rat(c * scale));
    return out;
}

std::string render_tiling(const MonotonicTiling& t) {
    const Partition& shape = t.shape();
    std::vector<std::string> grid(shape.size());
    for (size_t i = 0; i < shape.size(); ++i) grid[i].assign(static_cast<size_t>(shape[i]) * 2, ' ');
    const std::string ids = "123456789abcdefghijklmnopqrstuvwxyz";
    for (size_t k = 1; k < t.chain.size(); ++k) {
        const Partition& before = t.chain[k - 1];
        const Partition& after = t.chain[k];
        char id = ids[(k - 1) % ids.size()];
        for (size_t i = 0; i < after.size(); ++i) {
            int from = i < before.size() ? before[i] : 0;
            for (int j = from; j < after[i]; ++j) grid[i][2 * j] = id;
        }
        grid[t.depth[k - 1] - 1][2 * (t.tailCols[k - 1] - 1) + 1] = '*';
    }
    std::string out;
    for (const auto& row : grid) {
        std::string r = row;
        while (!r.empty() && r.back() == ' ') r.pop_back();
        out += r + "\n";
    }
    return out;
}

}  // namespace pathmn

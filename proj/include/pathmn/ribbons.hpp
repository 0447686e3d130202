#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pathmn/combinatorics.hpp"
#include "pathmn/symfunc.hpp"

namespace pathmn {

struct RibbonAddition {
    Partition base;
    Partition result;
    int size = 0;
    int tailRow = 0;  // 1-based row of the southwest cell
    int tailCol = 0;  // 1-based column of the southwest cell
    int sign = 1;     // (-1)^(rows occupied - 1)
};

// Every nu containing lam with nu/lam a ribbon of size r, ordered by tail row.
std::vector<RibbonAddition> add_ribbons(const Partition& lam, int r);

struct RibbonRemoval {
    Partition result;
    int sign = 1;
};
// Every rho inside lam with lam/rho a ribbon of size r.
std::vector<RibbonRemoval> remove_ribbons(const Partition& lam, int r);

// Signed count of standard ribbon tableaux of outer/inner with ribbon sizes alpha in order.
Int skew_mn(const SkewShape& shape, const Composition& alpha);
void clear_ribbon_caches();

struct MonotonicTiling {
    std::vector<Partition> chain;  // () = chain[0] ⊂ ... ⊂ chain[r]
    Composition type;
    std::vector<int> depth;     // tail rows, weakly decreasing
    std::vector<int> tailCols;  // strictly increasing
    std::vector<int> signs;     // per ribbon
    int sign = 1;

    const Partition& shape() const { return chain.back(); }
};

// Visits each monotonic tiling whose sorted ribbon sizes equal mu, depth first with tails by ascending column.
// The tiling passed to visit is only valid during the call.
void enumerate_monotonic(const Partition& mu, const std::function<void(const MonotonicTiling&)>& visit);
std::vector<MonotonicTiling> monotonic_tilings(const Partition& mu);

// shape -> signed tiling count, over monotonic tilings with sorted type mu.
std::map<Partition, Int, PartitionOrder> vec_chi_all(const Partition& mu);
Int vec_chi(const Partition& lam, const Partition& mu);

// Frozen monotonic tilings (every tail below row 1) using at most n-|mu| size-1 ribbons and
// at most m_i(mu) ribbons of size i > 1. Requires every part of mu >= 2 and n >= |mu|.
std::vector<MonotonicTiling> frozen_set(const Partition& mu, int n);
// vec-p_{mu(n)} from the frozen tilings and the tropical ordering count.
SymExpansion stable_expansion(const Partition& mu, int n);

// Grid of ribbon ids (1-9, then a-z) in placement order; each tail cell is followed by '*'.
std::string render_tiling(const MonotonicTiling& t);

}  // namespace pathmn

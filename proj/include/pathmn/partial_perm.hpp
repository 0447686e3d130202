#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pathmn/combinatorics.hpp"

namespace pathmn {

// Constraint pairs w(I[p]) = J[p] inside [n] (1-based labels).
struct PartialPermutation {
    int n = 0;
    std::vector<int> I;
    std::vector<int> J;

    int k() const { return static_cast<int>(I.size()); }
    bool operator==(const PartialPermutation& o) const { return n == o.n && I == o.I && J == o.J; }
};

struct GraphType {
    Partition pathType;
    Partition cycleType;

    auto operator<=>(const GraphType&) const = default;
};

struct IndicatorTerm {
    Rat coeff;
    PartialPermutation pp;
};

// Validates sizes and distinctness; throws std::invalid_argument.
PartialPermutation make_pp(int n, std::vector<int> I, std::vector<int> J);
// Pairs sorted ascending by source.
PartialPermutation canonical(const PartialPermutation& pp);

GraphType decompose(const PartialPermutation& pp);

// Pointwise product of indicators; nullopt when the constraints conflict.
std::optional<IndicatorTerm> indicator_product(const IndicatorTerm& a, const IndicatorTerm& b);

struct PackedPair {
    PartialPermutation pp;
    std::map<int, int> relabel;  // old label -> new label
};
PackedPair pack(const PartialPermutation& pp);

// (w(I), w(J)) for a permutation w of [n] in one-line notation (1-based values).
PartialPermutation relabel(const PartialPermutation& pp, const std::vector<int>& w);

Int local_dimension(int n, int k);
int lis_length(const std::vector<int>& w);
// Brute count of permutations of [n] whose longest increasing subsequence is >= n-k.
Int lis_count_brute(int n, int k);

// "1,4,5,6,7 -> 2,5,6,4,7" with ambient size n.
PartialPermutation parse_pp(const std::string& text, int n);
std::string format_pp(const PartialPermutation& pp);

}  // namespace pathmn

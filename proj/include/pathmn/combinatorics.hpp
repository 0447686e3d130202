#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pathmn/numeric.hpp"

namespace pathmn {

// Weakly decreasing positive parts, no trailing zeros. The empty vector is the partition of 0.
using Partition = std::vector<int>;
// Positive parts in significant order.
using Composition = std::vector<int>;

// Descending lexicographic order, the canonical order for map keys and output.
struct PartitionOrder {
    bool operator()(const Partition& a, const Partition& b) const { return a > b; }
};

struct SetPartition {
    // Blocks sorted by least element, elements ascending, labels 1..r.
    std::vector<std::vector<int>> blocks;
};

struct SkewShape {
    Partition outer;
    Partition inner;
};

bool is_partition(const std::vector<int>& parts);
bool is_composition(const std::vector<int>& parts);
// Sorts into weakly decreasing order and drops zeros; rejects negative entries.
Partition sort_partition(std::vector<int> parts);
int degree(const std::vector<int>& parts);

// m[i] = number of parts equal to i, for 0 <= i <= largest part.
std::vector<int> multiplicities(const Partition& mu);
Int mult_factorial(const Partition& mu);
Int z_mu(const Partition& mu);

// lambda[n] = (n - |lambda|, lambda_1, lambda_2, ...)
Partition pad_row(const Partition& lam, int n);
// mu(n) = (mu_1, ..., mu_r, 1^{n - |mu|})
Partition pad_column(const Partition& mu, int n);

// Inner partition (padded with zeros) fits inside outer.
bool contains(const Partition& outer, const Partition& inner);
Partition conjugate(const Partition& lam);

void for_each_set_partition(int r, const std::function<void(const SetPartition&)>& visit);
std::vector<SetPartition> enumerate_set_partitions(int r);

// Number of standard Young tableaux, via the hook-length product.
Int syt_count(const Partition& lam);

// All partitions of n in canonical (descending lexicographic) order.
std::vector<Partition> partitions_of(int n);
// Same order without materializing the list; the argument is only valid during the call.
void for_each_partition(int n, const std::function<void(const Partition&)>& visit);

// "[4,3,1]"; the empty partition prints as "[]".
std::string format_partition(const std::vector<int>& parts);
// Accepts "4,3,1", "[4,3,1]", "4 3 1", "2^2 1^3"; whitespace around separators is ignored.
// Entries must be positive; order is kept as given.
std::vector<int> parse_parts(const std::string& text);
// As parse_parts, but the result must already be weakly decreasing.
Partition parse_partition(const std::string& text);

}  // namespace pathmn

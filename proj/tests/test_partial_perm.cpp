#include <doctest.h>

#include <numeric>

#include "pathmn/partial_perm.hpp"

using namespace pathmn;

namespace {

std::vector<int> identity(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return w;
}

bool satisfies(const PartialPermutation& pp, const std::vector<int>& w) {
    for (int p = 0; p < pp.k(); ++p)
        if (w[pp.I[p] - 1] != pp.J[p]) return false;
    return true;
}

// Longest increasing subsequence by the quadratic dynamic program.
int lis_quadratic(const std::vector<int>& w) {
    std::vector<int> best(w.size(), 1);
    int top = 0;
    for (size_t i = 0; i < w.size(); ++i) {
        for (size_t j = 0; j < i; ++j)
            if (w[j] < w[i]) best[i] = std::max(best[i], best[j] + 1);
        top = std::max(top, best[i]);
    }
    return top;
}

}  // namespace

TEST_CASE("make_pp validates its input") {
    CHECK_NOTHROW(make_pp(4, {1, 2}, {2, 3}));
    CHECK_THROWS_AS(make_pp(4, {1, 1}, {2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(make_pp(4, {1, 2}, {3, 3}), std::invalid_argument);
    CHECK_THROWS_AS(make_pp(4, {1, 5}, {2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(make_pp(4, {1}, {2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(make_pp(4, {0}, {2}), std::invalid_argument);
}

TEST_CASE("graph decomposition") {
    GraphType g = decompose(make_pp(7, {1, 4, 5, 6, 7}, {2, 5, 6, 4, 7}));
    CHECK(g.pathType == Partition{2, 1});
    CHECK(g.cycleType == Partition{3, 1});
    for (int n = 2; n <= 8; ++n) {
        GraphType e = decompose(make_pp(n, {1}, {2}));
        CHECK(e.pathType == pad_column({2}, n));
        CHECK(e.cycleType.empty());
    }
    GraphType full = decompose(make_pp(3, {1, 2, 3}, {2, 3, 1}));
    CHECK(full.pathType.empty());
    CHECK(full.cycleType == Partition{3});
    GraphType none = decompose(make_pp(3, {}, {}));
    CHECK(none.pathType == Partition{1, 1, 1});
}

TEST_CASE("graph type is a relabeling invariant") {
    PartialPermutation pp = make_pp(6, {1, 3, 4}, {3, 2, 6});
    std::vector<int> w = identity(6);
    do {
        CHECK(decompose(relabel(pp, w)) == decompose(pp));
    } while (std::next_permutation(w.begin(), w.end()));
}

TEST_CASE("indicator products agree with pointwise multiplication") {
    const int n = 4;
    std::vector<PartialPermutation> pool = {make_pp(n, {1}, {2}), make_pp(n, {1}, {3}), make_pp(n, {2}, {3}),
                                            make_pp(n, {1, 2}, {2, 1}), make_pp(n, {3, 4}, {4, 1}), make_pp(n, {}, {})};
    for (const auto& a : pool)
        for (const auto& b : pool) {
            auto c = indicator_product({2, a}, {Rat(1, 3), b});
            std::vector<int> w = identity(n);
            do {
                Rat want = (satisfies(a, w) && satisfies(b, w)) ? Rat(2, 3) : Rat(0);
                Rat got = (c && satisfies(c->pp, w)) ? c->coeff : Rat(0);
                CHECK(got == want);
            } while (std::next_permutation(w.begin(), w.end()));
            if (c) CHECK(c->pp == canonical(c->pp));
        }
}

TEST_CASE("pack and canonical") {
    PackedPair p = pack(make_pp(9, {7, 2}, {9, 7}));
    CHECK(p.pp.n == 3);
    CHECK(p.pp.I == std::vector<int>{2, 1});
    CHECK(p.pp.J == std::vector<int>{3, 2});
    CHECK(p.relabel.at(9) == 3);
    PartialPermutation c = canonical(make_pp(5, {4, 1, 3}, {1, 5, 2}));
    CHECK(c.I == std::vector<int>{1, 3, 4});
    CHECK(c.J == std::vector<int>{5, 2, 1});
}

TEST_CASE("longest increasing subsequence") {
    CHECK(lis_length({}) == 0);
    CHECK(lis_length({3, 1, 2}) == 2);
    CHECK(lis_length({1, 2, 3, 4}) == 4);
    CHECK(lis_length({4, 3, 2, 1}) == 1);
    for (int n = 1; n <= 7; ++n) {
        std::vector<int> w = identity(n);
        do {
            CHECK(lis_length(w) == lis_quadratic(w));
        } while (std::next_permutation(w.begin(), w.end()));
    }
}

TEST_CASE("local dimension equals the count of long increasing subsequences") {
    for (int n = 1; n <= 7; ++n) {
        CHECK(local_dimension(n, n - 1) == factorial(n));
        CHECK(local_dimension(n, 0) == 1);
        for (int k = 0; k <= n - 1; ++k) CHECK(local_dimension(n, k) == lis_count_brute(n, k));
    }
    CHECK_THROWS_AS(local_dimension(4, 4), std::invalid_argument);
    CHECK_THROWS_AS(lis_count_brute(9, 1), GuardError);
}

TEST_CASE("partial permutation text") {
    PartialPermutation pp = parse_pp("1,4,5,6,7->2,5,6,4,7", 7);
    CHECK(pp.I == std::vector<int>{1, 4, 5, 6, 7});
    CHECK(pp.J == std::vector<int>{2, 5, 6, 4, 7});
    CHECK(parse_pp(format_pp(pp), 7) == pp);
    CHECK(parse_pp("->", 3).k() == 0);
    CHECK_THROWS_AS(parse_pp("1,2->3", 4), ParseError);
    CHECK_THROWS_AS(parse_pp("1,2,3", 4), ParseError);
    CHECK_THROWS_AS(parse_pp("1,1->2,3", 4), ParseError);
    CHECK_THROWS_AS(parse_pp("1->9", 4), ParseError);
}

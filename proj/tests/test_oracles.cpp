#include <doctest.h>

#include <algorithm>

#include "pathmn/oracles.hpp"
#include "pathmn/ribbons.hpp"

using namespace pathmn;

namespace {

WordArray example_array() {
    // positions 1..6: empty | empty | 3 7 | 8 1 4 | empty | 9 5 2 6
    return WordArray{{{}, {}, {3, 7}, {8, 1, 4}, {}, {9, 5, 2, 6}}};
}

const std::vector<int> kExampleMu = {3, 3, 3, 3, 2, 2, 2, 1, 1};

}  // namespace

TEST_CASE("brute atomic sums") {
    for (int n = 1; n <= 6; ++n) {
        SymExpansion a = brute_atomic(make_pp(n, {1}, {2 > n ? 1 : 2}));
        Rat total = 0;
        for (const auto& kv : a.terms) total += kv.second;
        CHECK(total == Rat(factorial(n - 1)));
    }
    SymExpansion e = brute_atomic(make_pp(4, {}, {}));
    CHECK(e.coeff({1, 1, 1, 1}) == 1);
    CHECK(e.coeff({4}) == 6);
    CHECK_THROWS_AS(brute_atomic(make_pp(10, {}, {})), GuardError);
}

TEST_CASE("alternant characters") {
    CHECK(alternant_char({4, 3, 1}, {3, 2, 2, 1}) == -1);
    for (int n = 1; n <= 6; ++n) {
        CHECK(alternant_char({n}, Composition(n, 1)) == 1);
        CHECK(alternant_char({n}, {n}) == 1);
        CHECK(alternant_char(Partition(n, 1), Composition(n, 1)) == 1);
    }
    for (int n = 0; n <= 6; ++n)
        for (const auto& lam : partitions_of(n))
            for (const auto& mu : partitions_of(n)) {
                Composition alpha(mu.rbegin(), mu.rend());
                CHECK(alternant_char(lam, alpha) == skew_mn({lam, {}}, alpha));
            }
    CHECK_THROWS_AS(alternant_char({2, 1}, {2}), std::invalid_argument);
}

TEST_CASE("unstable pairs of the example array") {
    WordArray w = example_array();
    CHECK_FALSE(is_stable(w, kExampleMu));
    auto pairs = unstable_pairs(w, kExampleMu);
    REQUIRE(pairs.size() == 10);
    std::vector<int> scores;
    for (const auto& p : pairs) scores.push_back(p.score);
    std::sort(scores.begin(), scores.end());
    CHECK(scores == std::vector<int>{-4, -1, -1, -1, -1, -1, -1, 2, 2, 2});
    CHECK(scores.front() == -4);
}

TEST_CASE("swapping an unstable pair transposes the weights") {
    WordArray w = example_array();
    std::vector<int> wt = weight(w, kExampleMu);
    for (const auto& p : unstable_pairs(w, kExampleMu)) {
        std::vector<int> want = wt;
        std::swap(want[p.i - 1], want[p.j - 1]);
        WordArray s = swap_pair(w, p);
        CHECK(weight(s, kExampleMu) == want);
        // the swapped pair is detected again, with the cuts exchanged
        auto again = unstable_pairs(s, kExampleMu);
        bool found = std::any_of(again.begin(), again.end(), [&](const UnstablePair& q) {
            return q.i == p.i && q.j == p.j && q.cutI == p.cutJ && q.cutJ == p.cutI;
        });
        CHECK(found);
        WordArray back = swap_pair(s, {p.i, p.j, p.cutJ, p.cutI, 0});
        CHECK(back.words == w.words);
    }
}

TEST_CASE("word array expansion") {
    SymExpansion one = word_array_path_expansion({1}, 2);
    CHECK(one == schur_monomial({1}));
    CHECK(word_array_path_expansion({3, 2, 1}, 6) == path_power_to_schur({3, 2, 1}));
    CHECK(word_array_path_expansion({3, 2, 1}, 6, false) == path_power_to_schur({3, 2, 1}));
    for (int n = 0; n <= 5; ++n)
        for (const auto& mu : partitions_of(n)) {
            CHECK(word_array_path_expansion(mu, n) == path_power_to_schur(mu));
            CHECK(word_array_path_expansion(mu, n + 1) == path_power_to_schur(mu));
        }
    CHECK_THROWS_AS(word_array_path_expansion({1, 1, 1, 1, 1, 1}, 6), GuardError);
    CHECK_THROWS_AS(word_array_path_expansion({2, 1}, 9), GuardError);
    CHECK_THROWS_AS(word_array_path_expansion({2, 1}, 2), std::invalid_argument);
}

#include <doctest.h>

#include <numeric>

#include "pathmn/characters.hpp"
#include "pathmn/oracles.hpp"
#include "pathmn/ribbons.hpp"

using namespace pathmn;

namespace {

Partition cycle_type(const std::vector<int>& w) {
    std::vector<char> seen(w.size(), 0);
    Partition out;
    for (size_t v = 0; v < w.size(); ++v) {
        if (seen[v]) continue;
        int len = 0;
        for (size_t u = v; !seen[u]; u = w[u] - 1) {
            seen[u] = 1;
            ++len;
        }
        out.push_back(len);
    }
    return sort_partition(out);
}

// chi^lam([I,J]) summed over completions, one classical character value per permutation.
Int char_sum_brute(const Partition& lam, const PartialPermutation& pp) {
    std::vector<int> w(pp.n);
    std::iota(w.begin(), w.end(), 1);
    Int total = 0;
    do {
        bool ok = true;
        for (int p = 0; p < pp.k() && ok; ++p) ok = w[pp.I[p] - 1] == pp.J[p];
        if (ok) total += skew_mn({lam, {}}, cycle_type(w));
    } while (std::next_permutation(w.begin(), w.end()));
    return total;
}

int sign_of(const Partition& mu) {
    int s = 1;
    for (int p : mu)
        if (p % 2 == 0) s = -s;
    return s;
}

}  // namespace

TEST_CASE("atomic expansion of the running example") {
    PartialPermutation pp = make_pp(7, {1, 4, 5, 6, 7}, {2, 5, 6, 4, 7});
    SymExpansion a = atomic_schur(pp);
    CHECK(a.terms.size() == 13);
    CHECK(a.coeff({7}) == 2);
    CHECK(a.coeff({4, 3}) == 3);
    CHECK(a.coeff({2, 1, 1, 1, 1, 1}) == -1);
    CHECK(a == atomic_schur_hybrid(pp));
    CHECK(char_eval({4, 3}, pp) == 3);
}

TEST_CASE("character values against summing over completions") {
    std::vector<PartialPermutation> cases = {make_pp(5, {}, {}),        make_pp(5, {1}, {2}),          make_pp(5, {1}, {1}),
                                             make_pp(5, {1, 2}, {2, 1}), make_pp(6, {1, 3}, {3, 5}),     make_pp(6, {2, 4, 6}, {4, 6, 2}),
                                             make_pp(6, {1, 2, 3}, {4, 5, 6}), make_pp(7, {1, 4, 5, 6, 7}, {2, 5, 6, 4, 7})};
    for (const auto& pp : cases) {
        auto row = char_row(pp);
        auto shapes = partitions_of(pp.n);
        REQUIRE(row.size() == shapes.size());
        for (size_t i = 0; i < shapes.size(); ++i) {
            Int brute = char_sum_brute(shapes[i], pp);
            CHECK(char_eval(shapes[i], pp) == brute);
            CHECK(row[i] == brute);
        }
    }
}

TEST_CASE("empty constraint gives n! on the trivial character only") {
    for (int n = 1; n <= 9; ++n) {
        auto row = char_row(make_pp(n, {}, {}));
        CHECK(row.front() == factorial(n));
        for (size_t i = 1; i < row.size(); ++i) CHECK(row[i] == 0);
    }
}

TEST_CASE("sign character through the atomic expansion") {
    for (int n = 2; n <= 6; ++n) {
        PartialPermutation pp = make_pp(n, {1, 2}, {2, 1});
        Int total = 0;
        std::vector<int> w(n);
        std::iota(w.begin(), w.end(), 1);
        do {
            if (w[0] == 2 && w[1] == 1) total += sign_of(cycle_type(w));
        } while (std::next_permutation(w.begin(), w.end()));
        CHECK(char_eval(Partition(n, 1), pp) == total);
    }
}

TEST_CASE("character table") {
    CharacterTable t = character_table(5);
    REQUIRE(t.shapes.size() == 7);
    for (size_t r = 0; r < t.shapes.size(); ++r) {
        CHECK(t.chi[r].back() == syt_count(t.shapes[r]));
        for (size_t c = 0; c < t.shapes.size(); ++c) CHECK(t.chi[r][c] == skew_mn({t.shapes[r], {}}, t.shapes[c]));
    }
    CHECK(character_table(7, 4).chi == character_table(7, 1).chi);
    CHECK(table_csv(character_table(2)) == "lambda\\mu,\"[2]\",\"[1,1]\"\n\"[2]\",1,1\n\"[1,1]\",-1,1\n");
    CHECK_THROWS_AS(character_table(21), GuardError);
}

TEST_CASE("Kronecker coefficients") {
    CharacterTable t = character_table(5);
    size_t m = t.shapes.size();
    for (size_t a = 0; a < m; ++a)
        for (size_t b = 0; b < m; ++b) {
            CHECK(kronecker_coefficient(t, a, 0, b) == (a == b ? 1 : 0));
            for (size_t c = 0; c < m; ++c) {
                Rat g = kronecker_coefficient(t, a, b, c);
                CHECK(g.get_den() == 1);
                CHECK(g >= 0);
                CHECK(g == kronecker_coefficient(t, c, a, b));
            }
        }
    // s_{41} * s_{41} = s_5 + s_41 + s_32 + s_311
    CHECK(kronecker_coefficient(t, 1, 1, 0) == 1);
    CHECK(kronecker_coefficient(t, 1, 1, 1) == 1);
    CHECK(kronecker_coefficient(t, 1, 1, 2) == 1);
    CHECK(kronecker_coefficient(t, 1, 1, 4) == 0);
}

TEST_CASE("support bound") {
    for (int n = 1; n <= 7; ++n)
        for (int k = 0; k <= std::min(n, 3); ++k) {
            std::vector<int> I, J;
            for (int i = 1; i <= k; ++i) {
                I.push_back(i);
                J.push_back(n + 1 - i);
            }
            PartialPermutation pp = make_pp(n, I, J);
            SymExpansion a = atomic_schur(pp);
            CHECK(support_check(a, n, k));
        }
}

TEST_CASE("coefficient polynomiality") {
    PartialPermutation ex = make_pp(2, {1}, {2});
    auto rep = coefficient_polynomiality(ex, {}, {2, 3, 4, 5});
    CHECK(rep.vanishes);
    CHECK(rep.order == 2);
    // c_() (n) = (n-1) for vec-p_{2,1^(n-2)} / (n-2)!
    CHECK(rep.values == std::vector<Rat>{1, 2, 3, 4});
    CHECK(coefficient_polynomiality(make_pp(4, {1, 2}, {3, 4}), {1}, {4, 5, 6, 7}).vanishes);
    CHECK_THROWS_AS(coefficient_polynomiality(ex, {}, {2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(coefficient_polynomiality(ex, {}, {2, 4, 5}), std::invalid_argument);
    CHECK_THROWS_AS(coefficient_polynomiality(make_pp(4, {1, 2}, {3, 4}), {}, {3, 4, 5, 6}), std::invalid_argument);
}

TEST_CASE("hybrid route agrees with the tiling route for larger n") {
    for (int n = 8; n <= 14; n += 3) {
        PartialPermutation pp = make_pp(n, {1, 2, 3, 5}, {2, 3, 1, 6});
        CHECK(atomic_schur(pp) == atomic_schur_hybrid(pp));
    }
    PartialPermutation big = make_pp(25, {1, 2, 3, 4}, {2, 3, 4, 5});
    CHECK(char_row(big).size() == partitions_of(25).size());
    CHECK_THROWS_AS(brute_atomic(big), GuardError);
}

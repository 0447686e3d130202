#include <doctest.h>

#include "pathmn/ribbons.hpp"
#include "pathmn/symfunc.hpp"

using namespace pathmn;

namespace {

SymExpansion schur_of(int n, const std::vector<std::pair<Partition, long>>& terms) {
    SymExpansion out(Basis::Schur, n);
    for (const auto& [lam, c] : terms) out.add(lam, Rat(c));
    return out;
}

}  // namespace

TEST_CASE("SymExpansion bookkeeping") {
    SymExpansion f(Basis::Schur, 3);
    f.add({3}, 2);
    f.add({2, 1}, Rat(1, 2));
    f.add({3}, -2);
    CHECK(f.terms.size() == 1);
    CHECK(f.coeff({3}) == 0);
    CHECK(f.coeff({2, 1}) == Rat(1, 2));
    CHECK_FALSE(f.is_integral());
    f *= 2;
    CHECK(f.is_integral());
    f *= 0;
    CHECK(f.terms.empty());
    SymExpansion g = schur_monomial({2}, 1);
    CHECK_THROWS_AS(g += power_monomial({2}), std::invalid_argument);
    CHECK_THROWS_AS(g += schur_monomial({3}), std::invalid_argument);
}

TEST_CASE("multiplying by power sums follows the ribbon rule") {
    CHECK(mult_by_power(schur_monomial({2}), 1) == schur_of(3, {{{3}, 1}, {{2, 1}, 1}}));
    CHECK(mult_by_power(schur_monomial({}), 3) == schur_of(3, {{{3}, 1}, {{2, 1}, -1}, {{1, 1, 1}, 1}}));
    CHECK(power_to_schur(power_monomial({2, 1})) == schur_of(3, {{{3}, 1}, {{1, 1, 1}, -1}}));
    CHECK_THROWS_AS(mult_by_power(schur_monomial({1}), 0), std::invalid_argument);
    CHECK_THROWS_AS(power_to_schur(schur_monomial({1})), std::invalid_argument);
}

TEST_CASE("power sums expand through characters that satisfy orthogonality") {
    for (int n = 1; n <= 7; ++n) {
        auto shapes = partitions_of(n);
        std::vector<SymExpansion> cols;
        for (const auto& mu : shapes) cols.push_back(power_to_schur(power_monomial(mu)));
        for (const auto& lam : shapes)
            for (const auto& nu : shapes) {
                Rat ip = 0;
                for (size_t j = 0; j < shapes.size(); ++j) ip += cols[j].coeff(lam) * cols[j].coeff(nu) / Rat(z_mu(shapes[j]));
                CHECK(ip == (lam == nu ? 1 : 0));
            }
        for (size_t j = 0; j < shapes.size(); ++j) CHECK(cols[j].is_integral());
        // p_1^n = sum of f^lam s_lam
        for (const auto& lam : shapes) CHECK(cols.back().coeff(lam) == Rat(syt_count(lam)));
    }
}

TEST_CASE("path power sums in the power basis") {
    // vec-p_{a,b} = p_a p_b + p_{a+b}
    SymExpansion two = path_power_in_p({2, 1});
    CHECK(two.coeff({2, 1}) == 1);
    CHECK(two.coeff({3}) == 1);
    CHECK(two.terms.size() == 2);
    // vec-p_{1^3} = p_1^3 + 3 p_21 + 2 p_3
    SymExpansion three = path_power_in_p({1, 1, 1});
    CHECK(three.coeff({1, 1, 1}) == 1);
    CHECK(three.coeff({2, 1}) == 3);
    CHECK(three.coeff({3}) == 2);
    // order of the parts does not matter
    CHECK(path_power_in_p({1, 3, 2}) == path_power_in_p({3, 2, 1}));
    CHECK_THROWS_AS(path_power_in_p(std::vector<int>(13, 1)), GuardError);
}

TEST_CASE("path basis inversion recovers power sums") {
    for (int n = 0; n <= 7; ++n)
        for (const auto& mu : partitions_of(n)) {
            SymExpansion back(Basis::Power, n);
            for (const auto& [nu, c] : p_in_path_basis(mu)) {
                SymExpansion v = path_power_in_p(nu);
                v *= c;
                back += v;
            }
            CHECK(back == power_monomial(mu));
        }
}

TEST_CASE("path power sums: two routes to the Schur basis") {
    for (int n = 0; n <= 7; ++n)
        for (const auto& mu : partitions_of(n)) CHECK(path_power_to_schur(mu) == power_to_schur(path_power_in_p(mu)));
    CHECK(path_power_to_schur({3, 2, 1}) == schur_of(6, {{{6}, 6}, {{5, 1}, -4}, {{4, 1, 1}, 2}, {{3, 3}, 2}, {{3, 2, 1}, -1}}));
    for (int n = 0; n <= 8; ++n) CHECK(path_power_to_schur(Partition(n, 1)) == schur_monomial(n ? Partition{n} : Partition{}, Rat(factorial(n))));
}

TEST_CASE("JSON round trip is exact") {
    for (int n = 0; n <= 6; ++n)
        for (const auto& mu : partitions_of(n)) {
            SymExpansion f = path_power_to_schur(mu);
            f *= Rat(3, 7);
            CHECK(from_json(to_json(f)) == f);
            CHECK(to_json(from_json(to_json(f))) == to_json(f));
            SymExpansion p = path_power_in_p(mu);
            CHECK(from_json(to_json(p)) == p);
        }
    CHECK_THROWS_AS(from_json("{"), ParseError);
    CHECK_THROWS_AS(from_json(R"({"basis":"x","degree":1,"terms":[]})"), ParseError);
    CHECK_THROWS_AS(from_json(R"({"basis":"schur","degree":2,"terms":[{"partition":[1],"num":"1","den":"1"}]})"), ParseError);
    CHECK_THROWS_AS(from_json(R"({"basis":"schur","degree":1,"terms":[{"partition":[1],"num":"1","den":"0"}]})"), ParseError);
}

TEST_CASE("human and CSV formats") {
    SymExpansion f(Basis::Schur, 6);
    f.add({6}, Rat(5, 2));
    f.add({5, 1}, Rat(-1, 2));
    CHECK(format_human(f) == "(5/2)\xC2\xB7s[6] \xE2\x88\x92 (1/2)\xC2\xB7s[5,1]");
    CHECK(format_human(f, true) == "(5/2)\xC2\xB7s[6]\n\xE2\x88\x92(1/2)\xC2\xB7s[5,1]");
    CHECK(format_csv(f) == "partition,coefficient\n\"[6]\",5/2\n\"[5,1]\",-1/2\n");
    CHECK(format_human(SymExpansion(Basis::Schur, 2)) == "0");
    CHECK(format_human(schur_monomial({})) == "1\xC2\xB7s[]");
    CHECK(format_human(power_monomial({2, 1}, -3)) == "\xE2\x88\x92" "3\xC2\xB7p[2,1]");
}

#pragma once

#include <string>
#include <vector>

#include "pathmn/partial_perm.hpp"
#include "pathmn/symfunc.hpp"

namespace pathmn {

// A_{n,I,J} = vec-p_mu * p_nu: path tilings for mu, then classical ribbons for nu (parts in decreasing order).
SymExpansion atomic_schur(const PartialPermutation& pp);
// Same expansion, with vec-p_mu taken from the frozen-tiling stable formula. Its cost does not grow
// with the number of size-1 paths beyond the partition count.
SymExpansion atomic_schur_hybrid(const PartialPermutation& pp);

// chi^lam([I,J]) = m(mu)! * sum_rho vec_chi(rho, mu) * skew_mn(lam/rho, nu).
Int char_eval(const Partition& lam, const PartialPermutation& pp);
// All chi^lam([I,J]) for lam |- n in canonical order, read off atomic_schur_hybrid.
std::vector<Int> char_row(const PartialPermutation& pp);

struct CharacterTable {
    int n = 0;
    std::vector<Partition> shapes;  // rows and columns, canonical order
    std::vector<std::vector<Int>> chi;  // chi[row lam][column mu]
};
// Guard: n <= 20 unless PATHMN_MAX_N overrides.
CharacterTable character_table(int n, int threads = 1);
std::string table_csv(const CharacterTable& t);

bool support_check(const SymExpansion& f, int n, int k);

struct PolynomialityReport {
    std::vector<int> ns;
    std::vector<Rat> values;       // c_lam(n)
    int order = 0;                 // k - |lam| + 1
    std::vector<Rat> differences;  // order-th finite differences
    bool vanishes = false;
};
// ppPacked is taken as the pattern; for each n the pair is embedded in [n].
PolynomialityReport coefficient_polynomiality(const PartialPermutation& ppPacked, const Partition& lam, const std::vector<int>& nRange);

// g_{lam,mu,nu} via the class-sum inner product of character rows.
Rat kronecker_coefficient(const CharacterTable& t, size_t lam, size_t mu, size_t nu);

}  // namespace pathmn

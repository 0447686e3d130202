#pragma once

#include <map>
#include <string>

#include "pathmn/combinatorics.hpp"

namespace pathmn {

enum class Basis { Schur, Power };

using Coeffs = std::map<Partition, Rat, PartitionOrder>;

// Sparse element of Lambda_n in one basis. Zero coefficients are never stored.
struct SymExpansion {
    Basis basis = Basis::Schur;
    int degree = 0;
    Coeffs terms;

    SymExpansion() = default;
    SymExpansion(Basis b, int n) : basis(b), degree(n) {}

    void add(const Partition& key, const Rat& c);
    Rat coeff(const Partition& key) const;
    SymExpansion& operator+=(const SymExpansion& o);
    SymExpansion& operator*=(const Rat& c);
    bool operator==(const SymExpansion& o) const { return basis == o.basis && degree == o.degree && terms == o.terms; }
    bool is_integral() const;
};

SymExpansion schur_monomial(const Partition& lam, const Rat& c = 1);
SymExpansion power_monomial(const Partition& mu, const Rat& c = 1);

// f * p_r for f in the Schur basis.
SymExpansion mult_by_power(const SymExpansion& f, int r);
SymExpansion power_to_schur(const SymExpansion& f);

// vec-p_mu expanded over classical power sums via set partitions of the parts.
SymExpansion path_power_in_p(const std::vector<int>& mu);
// p_mu expanded over path power sums (Moebius inversion); keys index vec-p.
Coeffs p_in_path_basis(const Partition& mu);
// vec-p_mu in the Schur basis via monotonic ribbon tilings.
SymExpansion path_power_to_schur(const Partition& mu);

std::string to_json(const SymExpansion& f);
SymExpansion from_json(const std::string& text);
// "(5/2)·s[6] − (1/2)·s[5,1]"; one term per line when longForm is set.
std::string format_human(const SymExpansion& f, bool longForm = false);
std::string format_csv(const SymExpansion& f);

}  // namespace pathmn

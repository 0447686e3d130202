#pragma once

#include <string>
#include <vector>

#include "pathmn/partial_perm.hpp"
#include "pathmn/symfunc.hpp"

namespace pathmn {

// f = sum of coeff * 1_{I,J}; terms canonical, merged, nonzero.
struct Statistic {
    int n = 0;
    std::vector<IndicatorTerm> terms;
};

// Class function R f, stored as ch_n(R f) in the Schur basis.
struct ClassFunction {
    int n = 0;
    SymExpansion schur;
};

Statistic make_statistic(int n, const std::vector<IndicatorTerm>& terms);
Statistic constant_statistic(int n, const Rat& c);
// "exc" or "maj".
Statistic builtin(const std::string& name, int n);
// Guard: n <= 12 unless PATHMN_MAX_N overrides.
Statistic stat_product(const Statistic& f, const Statistic& g);
Statistic stat_power(const Statistic& f, int m);

ClassFunction symmetrize(const Statistic& f);
Rat class_eval(const ClassFunction& cf, const Partition& mu);
Rat variance_on_class(const Statistic& f, const Partition& mu);

// f(w) for w in one-line notation with values 1..n.
Rat evaluate(const Statistic& f, const std::vector<int>& w);

// {"n":..., "terms":[{"coeff":"num/den","I":[...],"J":[...]}, ...]}
Statistic statistic_from_json(const std::string& text);
std::string statistic_to_json(const Statistic& f);

}  // namespace pathmn

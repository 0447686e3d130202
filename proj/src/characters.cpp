#include "pathmn/characters.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "pathmn/ribbons.hpp"

namespace pathmn {

namespace {

SymExpansion times_cycles(SymExpansion f, const Partition& nu) {
    for (int part : nu) f = mult_by_power(f, part);
    return f;
}

Partition drop_ones(const Partition& mu) {
    Partition out;
    for (int p : mu)
        if (p > 1) out.push_back(p);
    return out;
}

int support_size(const PartialPermutation& pp) {
    std::set<int> s(pp.I.begin(), pp.I.end());
    s.insert(pp.J.begin(), pp.J.end());
    return static_cast<int>(s.size());
}

}  // namespace

SymExpansion atomic_schur(const PartialPermutation& pp) {
    GraphType g = decompose(pp);
    return times_cycles(path_power_to_schur(g.pathType), g.cycleType);
}

SymExpansion atomic_schur_hybrid(const PartialPermutation& pp) {
    GraphType g = decompose(pp);
    SymExpansion paths = stable_expansion(drop_ones(g.pathType), degree(g.pathType));
    return times_cycles(paths, g.cycleType);
}

Int char_eval(const Partition& lam, const PartialPermutation& pp) {
    if (!is_partition(lam) || degree(lam) != pp.n) throw std::invalid_argument("char_eval: |lam| must equal n");
    GraphType g = decompose(pp);
    Int total = 0;
    for (const auto& [rho, c] : vec_chi_all(g.pathType)) {
        if (!contains(lam, rho)) continue;
        total += c * skew_mn({lam, rho}, g.cycleType);
    }
    return total * mult_factorial(g.pathType);
}

std::vector<Int> char_row(const PartialPermutation& pp) {
    SymExpansion a = atomic_schur_hybrid(pp);
    // both sequences are in canonical order, so one merge pass aligns them
    std::vector<Int> row;
    auto it = a.terms.begin();
    for_each_partition(pp.n, [&](const Partition& lam) {
        if (it != a.terms.end() && it->first == lam) {
            row.push_back(it->second.get_num());
            ++it;
        } else {
            row.emplace_back(0);
        }
    });
    return row;
}

CharacterTable character_table(int n, int threads) {
    if (n < 0) throw std::invalid_argument("character_table: negative n");
    if (n > guard_limit(20)) throw GuardError("character_table: n exceeds guard");
    CharacterTable t;
    t.n = n;
    t.shapes = partitions_of(n);
    size_t P = t.shapes.size();
    t.chi.assign(P, std::vector<Int>(P));
    auto column = [&](size_t j) {
        SymExpansion col = power_to_schur(power_monomial(t.shapes[j]));
        for (size_t i = 0; i < P; ++i) t.chi[i][j] = col.coeff(t.shapes[i]).get_num();
    };
    threads = std::max(1, threads);
    if (threads == 1) {
        for (size_t j = 0; j < P; ++j) column(j);
        return t;
    }
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w)
        pool.emplace_back([&, w]() {
            for (size_t j = static_cast<size_t>(w); j < P; j += static_cast<size_t>(threads)) column(j);
        });
    for (auto& th : pool) th.join();
    return t;
}

std::string table_csv(const CharacterTable& t) {
    std::string out = "lambda\\mu";
    for (const auto& mu : t.shapes) out += ",\"" + format_partition(mu) + "\"";
    out += "\n";
    for (size_t i = 0; i < t.shapes.size(); ++i) {
        out += "\"" + format_partition(t.shapes[i]) + "\"";
        for (const auto& v : t.chi[i]) out += "," + v.get_str();
        out += "\n";
    }
    return out;
}

bool support_check(const SymExpansion& f, int n, int k) {
    if (f.degree != n) throw std::invalid_argument("support_check: degree mismatch");
    for (const auto& kv : f.terms) {
        int first = kv.first.empty() ? 0 : kv.first[0];
        if (first < n - k) return false;
    }
    return true;
}

PolynomialityReport coefficient_polynomiality(const PartialPermutation& ppPacked, const Partition& lam, const std::vector<int>& nRange) {
    int k = ppPacked.k();
    int r = support_size(ppPacked);
    int ambient = 0;
    for (int x : ppPacked.I) ambient = std::max(ambient, x);
    for (int x : ppPacked.J) ambient = std::max(ambient, x);
    PolynomialityReport rep;
    rep.order = std::max(1, k - degree(lam) + 1);
    if (nRange.size() < static_cast<size_t>(rep.order) + 1) throw std::invalid_argument("coefficient_polynomiality: range too short");
    for (size_t i = 0; i < nRange.size(); ++i) {
        if (nRange[i] < std::max(2 * k, ambient)) throw std::invalid_argument("coefficient_polynomiality: range below stability threshold");
        if (i && nRange[i] != nRange[i - 1] + 1) throw std::invalid_argument("coefficient_polynomiality: range must be consecutive");
    }
    for (int n : nRange) {
        PartialPermutation pp = make_pp(n, ppPacked.I, ppPacked.J);
        SymExpansion a = atomic_schur(pp);
        int first = lam.empty() ? 0 : lam[0];
        Rat c = 0;
        if (n >= degree(lam) + first) c = a.coeff(pad_row(lam, n)) / Rat(factorial(n - r));
        rep.ns.push_back(n);
        rep.values.push_back(c);
    }
    std::vector<Rat> d = rep.values;
    for (int step = 0; step < rep.order; ++step) {
        std::vector<Rat> next;
        for (size_t i = 0; i + 1 < d.size(); ++i) next.push_back(d[i + 1] - d[i]);
        d = next;
    }
    rep.differences = d;
    rep.vanishes = std::all_of(d.begin(), d.end(), [](const Rat& x) { return x == 0; });
    return rep;
}

Rat kronecker_coefficient(const CharacterTable& t, size_t lam, size_t mu, size_t nu) {
    Rat total = 0;
    for (size_t j = 0; j < t.shapes.size(); ++j) {
        Int prod = t.chi[lam][j] * t.chi[mu][j] * t.chi[nu][j];
        Rat term(prod, z_mu(t.shapes[j]));
        term.canonicalize();
        total += term;
    }
    return total;
}

}  // namespace pathmn

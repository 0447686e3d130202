#include "pathmn/statistics.hpp"

#include <json.hpp>
#include <map>

#include "pathmn/characters.hpp"
#include "pathmn/ribbons.hpp"

namespace pathmn {

namespace {

using TermKey = std::pair<std::vector<int>, std::vector<int>>;

Statistic from_map(int n, const std::map<TermKey, Rat>& acc) {
    Statistic f;
    f.n = n;
    for (const auto& [key, c] : acc)
        if (c != 0) f.terms.push_back({c, {n, key.first, key.second}});
    return f;
}

}  // namespace

Statistic make_statistic(int n, const std::vector<IndicatorTerm>& terms) {
    std::map<TermKey, Rat> acc;
    for (const auto& t : terms) {
        if (t.pp.n != n) throw std::invalid_argument("statistic terms must share the ambient size");
        PartialPermutation c = canonical(make_pp(n, t.pp.I, t.pp.J));
        acc[{c.I, c.J}] += t.coeff;
    }
    return from_map(n, acc);
}

Statistic constant_statistic(int n, const Rat& c) { return make_statistic(n, {{c, {n, {}, {}}}}); }

Statistic builtin(const std::string& name, int n) {
    if (n < 1) throw std::invalid_argument("builtin statistic needs n >= 1");
    std::vector<IndicatorTerm> terms;
    if (name == "exc") {
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) terms.push_back({1, {n, {i}, {j}}});
    } else if (name == "maj") {
        // descent at i: w(i) = k > j = w(i+1), weighted by i
        for (int i = 1; i <= n - 1; ++i)
            for (int k = 1; k <= n; ++k)
                for (int j = 1; j < k; ++j) terms.push_back({i, {n, {i, i + 1}, {k, j}}});
    } else {
        throw std::invalid_argument("unknown statistic '" + name + "'");
    }
    return make_statistic(n, terms);
}

Statistic stat_product(const Statistic& f, const Statistic& g) {
    if (f.n != g.n) throw std::invalid_argument("stat_product: ambient sizes differ");
    if (f.n > guard_limit(12)) throw GuardError("stat_product: n exceeds guard");
    std::map<TermKey, Rat> acc;
    for (const auto& a : f.terms)
        for (const auto& b : g.terms) {
            auto c = indicator_product(a, b);
            if (c) acc[{c->pp.I, c->pp.J}] += c->coeff;
        }
    return from_map(f.n, acc);
}

Statistic stat_power(const Statistic& f, int m) {
    if (m < 0) throw std::invalid_argument("stat_power: negative exponent");
    Statistic out = constant_statistic(f.n, 1);
    for (int i = 0; i < m; ++i) out = stat_product(out, f);
    return out;
}

ClassFunction symmetrize(const Statistic& f) {
    std::map<GraphType, std::pair<Rat, PartialPermutation>> classes;
    for (const auto& t : f.terms) {
        GraphType g = decompose(t.pp);
        auto it = classes.find(g);
        if (it == classes.end()) classes.emplace(g, std::make_pair(t.coeff, t.pp));
        else it->second.first += t.coeff;
    }
    ClassFunction cf;
    cf.n = f.n;
    cf.schur = SymExpansion(Basis::Schur, f.n);
    Rat nfact(factorial(f.n));
    for (const auto& [g, data] : classes) {
        if (data.first == 0) continue;
        SymExpansion a = atomic_schur(data.second);
        a *= data.first / nfact;
        cf.schur += a;
    }
    return cf;
}

Rat class_eval(const ClassFunction& cf, const Partition& mu) {
    if (!is_partition(mu) || degree(mu) != cf.n) throw std::invalid_argument("class_eval: |mu| must equal n");
    Rat total = 0;
    for (const auto& [lam, c] : cf.schur.terms) total += c * Rat(skew_mn({lam, {}}, mu));
    return total;
}

Rat variance_on_class(const Statistic& f, const Partition& mu) {
    if (!is_partition(mu) || degree(mu) != f.n) throw std::invalid_argument("variance_on_class: |mu| must equal n");
    Rat mean = class_eval(symmetrize(f), mu);
    Rat second = class_eval(symmetrize(stat_product(f, f)), mu);
    return second - mean * mean;
}

Rat evaluate(const Statistic& f, const std::vector<int>& w) {
    if (static_cast<int>(w.size()) != f.n) throw std::invalid_argument("evaluate: permutation size mismatch");
    Rat total = 0;
    for (const auto& t : f.terms) {
        bool hit = true;
        for (int p = 0; p < t.pp.k() && hit; ++p) hit = w[t.pp.I[p] - 1] == t.pp.J[p];
        if (hit) total += t.coeff;
    }
    return total;
}

Statistic statistic_from_json(const std::string& text) {
    try {
        auto j = nlohmann::json::parse(text);
        int n = j.at("n").get<int>();
        std::vector<IndicatorTerm> terms;
        for (const auto& t : j.at("terms")) {
            Rat c;
            const auto& jc = t.at("coeff");
            if (jc.is_string()) c = parse_rational(jc.get<std::string>());
            else if (jc.is_number_integer()) c = Rat(Int(std::to_string(jc.get<long long>())));
            else throw ParseError("coeff must be a string fraction or an integer");
            auto I = t.at("I").get<std::vector<int>>();
            auto J = t.at("J").get<std::vector<int>>();
            terms.push_back({c, make_pp(n, I, J)});
        }
        return make_statistic(n, terms);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad statistic JSON: ") + e.what());
    } catch (const ParseError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("bad statistic JSON: ") + e.what());
    }
}

std::string statistic_to_json(const Statistic& f) {
    nlohmann::ordered_json j;
    j["n"] = f.n;
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& t : f.terms) {
        nlohmann::ordered_json e;
        e["coeff"] = to_string(t.coeff);
        e["I"] = t.pp.I;
        e["J"] = t.pp.J;
        j["terms"].push_back(e);
    }
    return j.dump();
}

}  // namespace pathmn

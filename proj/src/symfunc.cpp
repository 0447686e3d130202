#include "pathmn/symfunc.hpp"

#include <json.hpp>

#include "pathmn/ribbons.hpp"

namespace pathmn {

void SymExpansion::add(const Partition& key, const Rat& c) {
    if (c == 0) return;
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms.erase(it);
}

Rat SymExpansion::coeff(const Partition& key) const {
    auto it = terms.find(key);
    return it == terms.end() ? Rat(0) : it->second;
}

SymExpansion& SymExpansion::operator+=(const SymExpansion& o) {
    if (o.terms.empty()) return *this;
    if (terms.empty()) {
        basis = o.basis;
        degree = o.degree;
    } else if (basis != o.basis || degree != o.degree) {
        throw std::invalid_argument("adding expansions of different basis or degree");
    }
    for (const auto& [k, c] : o.terms) add(k, c);
    return *this;
}

SymExpansion& SymExpansion::operator*=(const Rat& c) {
    if (c == 0) {
        terms.clear();
        return *this;
    }
    for (auto& kv : terms) kv.second *= c;
    return *this;
}

bool SymExpansion::is_integral() const {
    for (const auto& kv : terms)
        if (kv.second.get_den() != 1) return false;
    return true;
}

SymExpansion schur_monomial(const Partition& lam, const Rat& c) {
    SymExpansion f(Basis::Schur, degree(lam));
    f.add(lam, c);
    return f;
}

SymExpansion power_monomial(const Partition& mu, const Rat& c) {
    SymExpansion f(Basis::Power, degree(mu));
    f.add(mu, c);
    return f;
}

SymExpansion mult_by_power(const SymExpansion& f, int r) {
    if (r < 1) throw std::invalid_argument("mult_by_power: r must be positive");
    if (f.basis != Basis::Schur) throw std::invalid_argument("mult_by_power: expects a Schur expansion");
    SymExpansion out(Basis::Schur, f.degree + r);
    for (const auto& [lam, c] : f.terms)
        for (const auto& a : add_ribbons(lam, r)) out.add(a.result, a.sign > 0 ? c : Rat(-c));
    return out;
}

SymExpansion power_to_schur(const SymExpansion& f) {
    if (f.basis != Basis::Power) throw std::invalid_argument("power_to_schur: expects a power-sum expansion");
    SymExpansion out(Basis::Schur, f.degree);
    for (const auto& [mu, c] : f.terms) {
        SymExpansion g = schur_monomial({}, c);
        for (int part : mu) g = mult_by_power(g, part);
        out += g;
    }
    return out;
}

SymExpansion path_power_in_p(const std::vector<int>& mu) {
    if (!is_composition(mu)) throw std::invalid_argument("path_power_in_p: parts must be positive");
    int r = static_cast<int>(mu.size());
    if (r > 12) throw GuardError("path_power_in_p: more than 12 parts");
    SymExpansion out(Basis::Power, degree(mu));
    for_each_set_partition(r, [&](const SetPartition& sp) {
        Int c = 1;
        std::vector<int> key;
        for (const auto& B : sp.blocks) {
            c *= factorial(static_cast<long>(B.size()) - 1);
            int s = 0;
            for (int b : B) s += mu[b - 1];
            key.push_back(s);
        }
        out.add(sort_partition(key), Rat(c));
    });
    return out;
}

Coeffs p_in_path_basis(const Partition& mu) {
    int r = static_cast<int>(mu.size());
    if (r > 12) throw GuardError("p_in_path_basis: more than 12 parts");
    SymExpansion acc(Basis::Power, degree(mu));
    for_each_set_partition(r, [&](const SetPartition& sp) {
        std::vector<int> key;
        for (const auto& B : sp.blocks) {
            int s = 0;
            for (int b : B) s += mu[b - 1];
            key.push_back(s);
        }
        acc.add(sort_partition(key), ((r - static_cast<int>(sp.blocks.size())) % 2) ? Rat(-1) : Rat(1));
    });
    return acc.terms;
}

SymExpansion path_power_to_schur(const Partition& mu) {
    if (!is_partition(mu)) throw std::invalid_argument("path_power_to_schur: expects a partition");
    SymExpansion out(Basis::Schur, degree(mu));
    Int m = mult_factorial(mu);
    for (const auto& [shape, c] : vec_chi_all(mu)) out.add(shape, Rat(c * m));
    return out;
}

std::string to_json(const SymExpansion& f) {
    nlohmann::ordered_json j;
    j["basis"] = f.basis == Basis::Schur ? "schur" : "power";
    j["degree"] = f.degree;
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& [lam, c] : f.terms) {
        nlohmann::ordered_json t;
        t["partition"] = lam;
        t["num"] = c.get_num().get_str();
        t["den"] = c.get_den().get_str();
        j["terms"].push_back(t);
    }
    return j.dump();
}

SymExpansion from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad expansion JSON: ") + e.what());
    }
    try {
        SymExpansion f;
        std::string b = j.at("basis").get<std::string>();
        if (b == "schur") f.basis = Basis::Schur;
        else if (b == "power") f.basis = Basis::Power;
        else throw ParseError("unknown basis '" + b + "'");
        f.degree = j.at("degree").get<int>();
        for (const auto& t : j.at("terms")) {
            Partition lam = t.at("partition").get<std::vector<int>>();
            if (!is_partition(lam) || degree(lam) != f.degree) throw ParseError("term partition invalid for degree");
            Int den(t.at("den").get<std::string>());
            if (den == 0) throw ParseError("zero denominator");
            Rat c(Int(t.at("num").get<std::string>()), den);
            c.canonicalize();
            f.add(lam, c);
        }
        return f;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad expansion JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("bad expansion JSON: ") + e.what());
    }
}

namespace {

const char* kMinus = "\xE2\x88\x92";  // U+2212
const char* kDot = "\xC2\xB7";        // U+00B7

std::string magnitude(const Rat& c) {
    Rat a = abs(c);
    if (a.get_den() == 1) return a.get_num().get_str();
    return "(" + to_string(a) + ")";
}

}  // namespace

std::string format_human(const SymExpansion& f, bool longForm) {
    if (f.terms.empty()) return "0";
    const char* letter = f.basis == Basis::Schur ? "s" : "p";
    std::string out;
    bool first = true;
    for (const auto& [lam, c] : f.terms) {
        std::string term = magnitude(c) + kDot + letter + format_partition(lam);
        if (longForm) {
            if (!first) out += "\n";
            out += (c < 0 ? std::string(kMinus) : std::string("")) + term;
        } else if (first) {
            out += (c < 0 ? std::string(kMinus) : std::string("")) + term;
        } else {
            out += (c < 0 ? std::string(" ") + kMinus + " " : std::string(" + ")) + term;
        }
        first = false;
    }
    return out;
}

std::string format_csv(const SymExpansion& f) {
    std::string out = "partition,coefficient\n";
    for (const auto& [lam, c] : f.terms) out += "\"" + format_partition(lam) + "\"," + to_string(c) + "\n";
    return out;
}

}  // namespace pathmn

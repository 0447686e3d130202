#include "pathmn/combinatorics.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace pathmn {

bool is_partition(const std::vector<int>& parts) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) return false;
        if (i + 1 < parts.size() && parts[i] < parts[i + 1]) return false;
    }
    return true;
}

bool is_composition(const std::vector<int>& parts) {
    return std::all_of(parts.begin(), parts.end(), [](int p) { return p >= 1; });
}

Partition sort_partition(std::vector<int> parts) {
    for (int p : parts)
        if (p < 0) throw std::invalid_argument("negative part");
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return parts;
}

int degree(const std::vector<int>& parts) { return std::accumulate(parts.begin(), parts.end(), 0); }

std::vector<int> multiplicities(const Partition& mu) {
    int top = mu.empty() ? 0 : *std::max_element(mu.begin(), mu.end());
    std::vector<int> m(top + 1, 0);
    for (int p : mu) ++m[p];
    return m;
}

Int mult_factorial(const Partition& mu) {
    Int r = 1;
    for (int c : multiplicities(mu)) r *= factorial(c);
    return r;
}

Int z_mu(const Partition& mu) {
    auto m = multiplicities(mu);
    Int r = 1;
    for (size_t i = 1; i < m.size(); ++i) {
        Int p;
        mpz_ui_pow_ui(p.get_mpz_t(), i, static_cast<unsigned long>(m[i]));
        r *= p * factorial(m[i]);
    }
    return r;
}

Partition pad_row(const Partition& lam, int n) {
    int first = lam.empty() ? 0 : lam[0];
    if (n < degree(lam) + first) throw std::invalid_argument("pad_row: n too small for padding");
    Partition out;
    out.reserve(lam.size() + 1);
    out.push_back(n - degree(lam));
    out.insert(out.end(), lam.begin(), lam.end());
    if (out[0] == 0) out.clear();
    return out;
}

Partition pad_column(const Partition& mu, int n) {
    int d = degree(mu);
    if (n < d) throw std::invalid_argument("pad_column: n smaller than |mu|");
    Partition out = mu;
    out.insert(out.end(), static_cast<size_t>(n - d), 1);
    return out;
}

bool contains(const Partition& outer, const Partition& inner) {
    if (inner.size() > outer.size()) return false;
    for (size_t i = 0; i < inner.size(); ++i)
        if (inner[i] > outer[i]) return false;
    return true;
}

Partition conjugate(const Partition& lam) {
    Partition c;
    if (lam.empty()) return c;
    for (int j = 1; j <= lam[0]; ++j) {
        int cnt = 0;
        for (int p : lam)
            if (p >= j) ++cnt;
        c.push_back(cnt);
    }
    return c;
}

void for_each_set_partition(int r, const std::function<void(const SetPartition&)>& visit) {
    if (r < 0) throw std::invalid_argument("negative set size");
    // restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1])
    std::vector<int> a(r, 0);
    SetPartition sp;
    std::function<void(int, int)> rec = [&](int i, int mx) {
        if (i == r) {
            sp.blocks.assign(mx + 1, {});
            for (int t = 0; t < r; ++t) sp.blocks[a[t]].push_back(t + 1);
            if (r == 0) sp.blocks.clear();
            visit(sp);
            return;
        }
        for (int b = 0; b <= mx + 1; ++b) {
            a[i] = b;
            rec(i + 1, std::max(mx, b));
        }
    };
    if (r == 0) {
        visit(sp);
        return;
    }
    a[0] = 0;
    rec(1, 0);
}

std::vector<SetPartition> enumerate_set_partitions(int r) {
    std::vector<SetPartition> out;
    for_each_set_partition(r, [&](const SetPartition& sp) { out.push_back(sp); });
    return out;
}

Int syt_count(const Partition& lam) {
    int n = degree(lam);
    Partition c = conjugate(lam);
    Int hooks = 1;
    for (size_t i = 0; i < lam.size(); ++i)
        for (int j = 0; j < lam[i]; ++j) hooks *= (lam[i] - j - 1) + (c[j] - static_cast<int>(i) - 1) + 1;
    return factorial(n) / hooks;
}

void for_each_partition(int n, const std::function<void(const Partition&)>& visit) {
    if (n < 0) return;
    if (n == 0) return visit(Partition{});
    // successor in descending lexicographic order: lower the last part above 1, refill greedily
    Partition cur{n};
    cur.reserve(n);
    while (true) {
        visit(cur);
        int ones = 0;
        while (!cur.empty() && cur.back() == 1) {
            cur.pop_back();
            ++ones;
        }
        if (cur.empty()) return;
        int v = --cur.back();
        int rest = ones + 1;
        while (rest >= v) {
            cur.push_back(v);
            rest -= v;
        }
        if (rest > 0) cur.push_back(rest);
    }
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

std::string format_partition(const std::vector<int>& parts) {
    std::string s = "[";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s + "]";
}

std::vector<int> parse_parts(const std::string& text) {
    // Normalise: brackets and commas become spaces, whitespace around '^' is dropped.
    std::string t;
    for (char c : text) {
        if (c == '[' || c == ']' || c == ',' || c == '(' || c == ')') t += ' ';
        else t += c;
    }
    std::string u;
    for (size_t i = 0; i < t.size(); ++i) {
        if (std::isspace(static_cast<unsigned char>(t[i]))) {
            size_t j = i;
            while (j < t.size() && std::isspace(static_cast<unsigned char>(t[j]))) ++j;
            bool nextCaret = j < t.size() && t[j] == '^';
            bool prevCaret = !u.empty() && u.back() == '^';
            if (!nextCaret && !prevCaret) u += ' ';
            i = j - 1;
        } else {
            u += t[i];
        }
    }
    std::istringstream in(u);
    std::string tok;
    std::vector<int> parts;
    auto to_int = [&](const std::string& s) {
        if (s.empty() || s.size() > 9 || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw ParseError("bad partition token '" + s + "' in \"" + text + "\"");
        return std::stoi(s);
    };
    while (in >> tok) {
        size_t caret = tok.find('^');
        if (caret == std::string::npos) {
            int v = to_int(tok);
            if (v < 1) throw ParseError("partition parts must be positive: \"" + text + "\"");
            parts.push_back(v);
        } else {
            int v = to_int(tok.substr(0, caret));
            int e = to_int(tok.substr(caret + 1));
            if (v < 1) throw ParseError("partition parts must be positive: \"" + text + "\"");
            parts.insert(parts.end(), static_cast<size_t>(e), v);
        }
    }
    return parts;
}

Partition parse_partition(const std::string& text) {
    auto parts = parse_parts(text);
    if (!is_partition(parts)) throw ParseError("not a weakly decreasing partition: \"" + text + "\"");
    return parts;
}

}  // namespace pathmn

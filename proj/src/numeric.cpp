#include "pathmn/numeric.hpp"

#include <cctype>
#include <cstdlib>

namespace pathmn {

int guard_limit(int default_limit) {
    const char* env = std::getenv("PATHMN_MAX_N");
    if (env == nullptr || *env == '\0') return default_limit;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 0) return default_limit;
    return static_cast<int>(v);
}

Int factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial of negative number");
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Int multinomial(const std::vector<long>& parts) {
    long total = 0;
    for (long p : parts) {
        if (p < 0) return 0;
        total += p;
    }
    Int r = 1;
    long acc = 0;
    for (long p : parts) {
        acc += p;
        r *= binomial(acc, p);
    }
    return r;
}

std::string to_string(const Int& x) { return x.get_str(); }

std::string to_string(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rat parse_rational(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw ParseError("empty rational");
    auto valid_int = [](const std::string& u) {
        size_t i = (!u.empty() && (u[0] == '-' || u[0] == '+')) ? 1 : 0;
        if (i == u.size()) return false;
        for (; i < u.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(u[i]))) return false;
        return true;
    };
    auto strip_plus = [](std::string u) { return (!u.empty() && u[0] == '+') ? u.substr(1) : u; };
    size_t slash = t.find('/');
    if (slash == std::string::npos) {
        if (!valid_int(t)) throw ParseError("bad rational: " + s);
        return Rat(Int(strip_plus(t)));
    }
    std::string a = t.substr(0, slash), b = t.substr(slash + 1);
    if (!valid_int(a) || !valid_int(b)) throw ParseError("bad rational: " + s);
    Int den(strip_plus(b));
    if (den == 0) throw ParseError("zero denominator: " + s);
    Rat r(Int(strip_plus(a)), den);
    r.canonicalize();
    return r;
}

}  // namespace pathmn

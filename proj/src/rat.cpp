#include "focal/rat.hpp"

#include <cctype>

namespace focal {

Rat parse_rat(std::string_view text, int line) {
    auto fail = [&]() -> Rat {
        throw ParseError(line, "expected rational 'p' or 'p/q', got '" + std::string(text) + "'");
    };
    if (text.empty()) return fail();
    std::size_t slash = text.find('/');
    auto is_int_token = [](std::string_view t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    if (slash == std::string_view::npos) {
        if (!is_int_token(text)) return fail();
        Rat q(std::string(text), 10);
        q.canonicalize();
        return q;
    }
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!is_int_token(num) || !is_int_token(den)) return fail();
    Int n(std::string(num), 10), d(std::string(den), 10);
    if (d == 0) return fail();
    return rat(n, d);
}

std::string rat_str(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::optional<std::pair<Int, Int>> integer_interval(const Rat& a, const Rat& r2) {
    if (sgn(r2) < 0) return std::nullopt;
    // x in [a - sqrt(r2), a + sqrt(r2)].  With a = p/q and r2 = s/t,
    // a + sqrt(r2) = (p t + q sqrt(s t)) / (q t).  floor(sqrt(s t)) misses the
    // true square root by less than 1, so the quotient below is off by at most
    // one from floor(a + sqrt(r2)); a single exact membership test repairs it.
    const Int& p = a.get_num();
    const Int& q = a.get_den();
    const Int& s = r2.get_num();
    const Int& t = r2.get_den();
    Int st = s * t;
    Int root;
    mpz_sqrt(root.get_mpz_t(), st.get_mpz_t());

    Int qt = q * t;
    auto inside = [&](const Int& x) {
        Rat diff = rat(x, 1) - a;
        return diff * diff <= r2;
    };

    Int hi;
    mpz_fdiv_q(hi.get_mpz_t(), Int(p * t + q * root).get_mpz_t(), qt.get_mpz_t());
    if (inside(hi + 1)) hi += 1;  // hi is now floor(a + sqrt(r2)) or below L when empty

    Int lo;
    mpz_cdiv_q(lo.get_mpz_t(), Int(p * t - q * root).get_mpz_t(), qt.get_mpz_t());
    if (inside(lo - 1)) lo -= 1;  // lo is now ceil(a - sqrt(r2)) or above U when empty

    if (lo > hi || !inside(hi) || !inside(lo)) return std::nullopt;
    return std::make_pair(lo, hi);
}

}  // namespace focal

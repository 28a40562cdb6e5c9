#include "wheelzeta/univariate.hpp"

#include <map>
#include <mutex>

namespace wheelzeta {

std::vector<unsigned> divisors(unsigned n) {
    std::vector<unsigned> out;
    for (unsigned d = 1; d <= n; ++d) {
        if (n % d == 0) out.push_back(d);
    }
    return out;
}

std::string to_string(const IntPolynomial& p, char var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (long i = p.degree(); i >= 0; --i) {
        const BigInt& c = p.coefficients()[static_cast<std::size_t>(i)];
        if (sgn(c) == 0) continue;
        const bool first = out.empty();
        if (first) {
            if (sgn(c) < 0) out += "-";
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        BigInt mag = abs(c);
        std::string mono = i == 0 ? "" : (i == 1 ? std::string(1, var) : std::string(1, var) + "^" + std::to_string(i));
        if (mono.empty()) out += to_decimal(mag);
        else if (mag == 1) out += mono;
        else out += to_decimal(mag) + "*" + mono;
    }
    return out;
}

IntPolynomial cyclotomic(unsigned d) {
    if (d == 0) throw InvalidArgument("cyclotomic index must be >= 1");
    static std::mutex mu;
    static std::map<unsigned, IntPolynomial> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(d); it != cache.end()) return it->second;
    }
    IntPolynomial xd_minus_1 = IntPolynomial::monomial(BigInt(1), d) - IntPolynomial::constant(BigInt(1));
    IntPolynomial lower = IntPolynomial::constant(BigInt(1));
    for (unsigned e : divisors(d)) {
        if (e < d) lower *= cyclotomic(e);
    }
    IntPolynomial result = exact_div(xd_minus_1, lower);
    std::lock_guard lock(mu);
    cache.emplace(d, result);
    return result;
}

} // namespace wheelzeta

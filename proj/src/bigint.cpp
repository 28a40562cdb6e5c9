#include "wheelzeta/bigint.hpp"

#include "wheelzeta/errors.hpp"


namespace wheelzeta {

std::string to_decimal(const BigInt& v) { return v.get_str(10); }

BigInt parse_decimal(std::string_view s) {
    std::string str(s);
    if (str.empty()) throw InvalidArgument("empty integer literal");
    if (str.front() == '+') str.erase(0, 1);
    BigInt v;
    if (str.empty() || v.set_str(str, 10) != 0) throw InvalidArgument("not a decimal integer: '" + std::string(s) + "'");
    return v;
}

BigInt exact_div(const BigInt& a, const BigInt& b) {
    if (sgn(b) == 0) throw InvalidArgument("integer division by zero");
    BigInt r;
    mpz_tdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (sgn(r) != 0) throw DivisionError(to_decimal(b) + " does not divide " + to_decimal(a), to_decimal(r));
    BigInt out;
    mpz_divexact(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

BigInt big_gcd(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

std::int64_t to_int64(const BigInt& v) {
    if (!v.fits_slong_p())
        throw InvalidArgument("integer " + to_decimal(v) + " does not fit in 64 bits");
    return v.get_si();
}

} // namespace wheelzeta

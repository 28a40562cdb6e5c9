#include "doctest.h"

#include "wheelzeta/bigint.hpp"
#include "wheelzeta/bivariate.hpp"
#include "wheelzeta/errors.hpp"
#include "wheelzeta/matrix.hpp"
#include "wheelzeta/series.hpp"
#include "wheelzeta/snf.hpp"
#include "wheelzeta/univariate.hpp"

#include <random>

using namespace wheelzeta;
using P = BivariatePolynomial;

TEST_CASE("bigint parsing and exact division") {
    CHECK(to_decimal(parse_decimal("-123456789012345678901234567890")) == "-123456789012345678901234567890");
    CHECK_THROWS_AS(parse_decimal("12a"), InvalidArgument);
    CHECK(exact_div(BigInt(91), BigInt(7)) == 13);
    CHECK_THROWS_AS(exact_div(BigInt(10), BigInt(3)), DivisionError);
    CHECK(to_int64(BigInt(-42)) == -42);
    CHECK_THROWS_AS(to_int64(parse_decimal("99999999999999999999999")), InvalidArgument);
}

TEST_CASE("bivariate arithmetic") {
    const P q = P::q(), t = P::t();
    const P a = t + P(2) * (P(1) + q);
    CHECK(a.coefficient(0, 0) == 2);
    CHECK(a.coefficient(1, 0) == 2);
    CHECK(a.coefficient(0, 1) == 1);
    CHECK(a.eval(1, 1) == 5);
    CHECK((a * a).eval(3, 2) == 100);
    CHECK(a.negate_second() == -t + P(2) * (P(1) + q));
    CHECK((q + t).pow(3) == (q + t) * (q + t) * (q + t));
    CHECK((a - a).is_zero());
    CHECK(a.degree_q() == 1);
    CHECK(a.degree_t() == 1);
    CHECK((t * t + P(2) * q * t + P(2) * t).to_string() == "t^2 + 2*q*t + 2*t");
    CHECK(q.to_string('N') == "q");
}

TEST_CASE("bivariate exact division reports the remainder") {
    const P q = P::q(), t = P::t();
    const P a = (q + t + P(1)) * (q * t - P(3));
    CHECK(exact_div(a, q * t - P(3)) == q + t + P(1));
    try {
        exact_div(t * t + P(1), t);
        FAIL("expected DivisionError");
    } catch (const DivisionError& e) {
        CHECK(e.remainder() == "1");
    }
    CHECK_THROWS_AS(exact_div(q, P(0)), InvalidArgument);
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(to_string(cyclotomic(1)) == "x - 1");
    CHECK(cyclotomic(6) == IntPolynomial{1, -1, 1});
    CHECK(cyclotomic(12) == IntPolynomial{1, 0, -1, 0, 1});
    CHECK(cyclotomic(9) == IntPolynomial{1, 0, 0, 1, 0, 0, 1});
    CHECK_THROWS_AS(cyclotomic(0), InvalidArgument);
    for (unsigned n = 1; n <= 30; ++n) {
        IntPolynomial prod = IntPolynomial::constant(1);
        for (unsigned d : divisors(n)) prod *= cyclotomic(d);
        CHECK(prod == IntPolynomial::monomial(1, n) - IntPolynomial::constant(1));
    }
    CHECK(divisors(12) == std::vector<unsigned>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("determinants agree") {
    const IntMatrix m{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
    CHECK(det_bareiss(m) == 4);
    CHECK(det_cofactor(m) == 4);
    const IntMatrix swap{{0, 1}, {1, 0}};
    CHECK(det_bareiss(swap) == -1);
    const PolyMatrix pm{{P::q(), P(1)}, {P(1), P::t()}};
    CHECK(det_poly(pm) == P::q() * P::t() - P(1));
    CHECK(det_cofactor(pm) == det_poly(pm));
}

TEST_CASE("smith normal form") {
    CHECK(smith_normal_form(IntMatrix{{6, -4}, {-4, 6}}).invariant_factors == std::vector<BigInt>{2, 10});
    CHECK(smith_normal_form(IntMatrix{{2, 0}, {0, 3}}).invariant_factors == std::vector<BigInt>{1, 6});
    CHECK(smith_normal_form(IntMatrix{{0, 0}, {0, 0}}).invariant_factors == std::vector<BigInt>{0, 0});
    const auto rect = smith_normal_form(IntMatrix{{2, 4, 4}, {-6, 6, 12}});
    CHECK(rect.invariant_factors == std::vector<BigInt>{2, 6});
    const auto padded = smith_normal_form_padded(IntMatrix{{4, 8}, {8, 20}}, 1);
    CHECK(padded.invariant_factors == std::vector<BigInt>{1, 4, 4});
    CHECK(padded.nontrivial() == std::vector<BigInt>{4, 4});
    CHECK(padded.product() == 16);
    CHECK(padded.divisibility_chain_holds());
}

TEST_CASE("series expansion and log counts") {
    const P q = P::q(), t = P::t();
    // 1/(1 - T) = 1 + T + T^2 + ...
    const RationalSeries geo{TPolynomial{P(1)}, TPolynomial{P(1), P(-1)}};
    for (const auto& c : series_expand(geo, 5)) CHECK(c == P(1));
    CHECK_THROWS_AS(series_expand(RationalSeries{TPolynomial{P(1)}, TPolynomial{P(0), P(1)}}, 3), SingularSeries);
    // log 1/(1 - tT) has counts t^k.
    const RationalSeries one{TPolynomial{P(1)}, TPolynomial{P(1), -t}};
    const auto counts = log_series_counts(one, 4);
    for (unsigned k = 1; k <= 4; ++k) CHECK(counts[k - 1] == t.pow(k));
    CHECK(exp_from_counts(counts, 4) == series_expand(one, 4));
    CHECK_THROWS_AS(log_series_counts(RationalSeries{TPolynomial{P(2)}, TPolynomial{P(1)}}, 2), InvalidArgument);
    CHECK_THROWS_AS(exp_from_counts({P(1), P(0)}, 2), InternalError);
    const RationalSeries z{TPolynomial{P(1), -q}, TPolynomial{P(1), -q}};
    CHECK(z.equivalent(RationalSeries{TPolynomial{P(1)}, TPolynomial{P(1)}}));
}

TEST_CASE("randomized determinant and SNF cross-checks") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> small(-3, 3), deg(0, 2), sz(1, 6);
    for (int i = 0; i < 60; ++i) {
        const std::size_t n = static_cast<std::size_t>(sz(rng));
        PolyMatrix m(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                m(r, c) = P::monomial(small(rng), deg(rng), deg(rng)) + P(small(rng));
        CHECK(det_bareiss(m) == det_cofactor(m));
    }
    std::uniform_int_distribution<int> ent(-20, 20), size8(1, 8);
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = static_cast<std::size_t>(size8(rng));
        IntMatrix m(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) m(r, c) = ent(rng);
        const auto s = smith_normal_form(m);
        CHECK(s.divisibility_chain_holds());
        const BigInt d = abs(det_bareiss(m));
        if (d != 0) CHECK(s.product() == d);
        // Invariant under the admissible moves.
        IntMatrix moved = m;
        moved.swap_rows(0, n - 1);
        if (n > 1)
            for (std::size_t c = 0; c < n; ++c) moved(0, c) += 3 * moved(n - 1, c);
        CHECK(smith_normal_form(moved) == s);
    }
    CHECK(smith_normal_form(IntMatrix::identity(4)).invariant_factors == std::vector<BigInt>(4, 1));
}

TEST_CASE("series examples") {
    const RationalSeries z{TPolynomial{P(1), P(-2), P(1)}, TPolynomial{P(1), P(-3), P(1)}};
    CHECK(series_expand(z, 2) == std::vector<P>{P(1), P(1), P(3)});
    CHECK(series_expand(RationalSeries{TPolynomial{P(3), P::q()}, TPolynomial{P(1)}}, 3) == std::vector<P>{P(3), P::q(), P(0), P(0)});
    const RationalSeries geo{TPolynomial{P(1)}, TPolynomial{P(1), -P::q()}};
    CHECK(log_series_counts(geo, 3) == std::vector<P>{P::q(), P::q().pow(2), P::q().pow(3)});
    const RationalSeries lhs = z * geo;
    const auto a = series_expand(lhs, 5), b = series_expand(z, 5), c = series_expand(geo, 5);
    for (std::size_t n = 0; n <= 5; ++n) {
        P conv;
        for (std::size_t j = 0; j <= n; ++j) conv += b[j] * c[n - j];
        CHECK(a[n] == conv);
    }
}

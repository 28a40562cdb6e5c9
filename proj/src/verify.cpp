#include "wheelzeta/verify.hpp"

#include "wheelzeta/chipfire.hpp"
#include "wheelzeta/curve.hpp"
#include "wheelzeta/ecnum.hpp"
#include "wheelzeta/errors.hpp"
#include "wheelzeta/langzeta.hpp"
#include "wheelzeta/shiftfrob.hpp"
#include "wheelzeta/snf.hpp"
#include "wheelzeta/structure.hpp"
#include "wheelzeta/treebij.hpp"
#include "wheelzeta/univariate.hpp"
#include "wheelzeta/wheel.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace wheelzeta {

namespace {

using P = BivariatePolynomial;

// Outcome of a check body: empty string on success, otherwise the first
// failure. The summary line is attached either way.
struct Outcome {
    std::string failure;
    std::string summary;
};

P q() { return P::q(); }
P t() { return P::t(); }
P qp(unsigned n) { return P::q().pow(n); }
P tp(unsigned n) { return P::t().pow(n); }

// The table of WCyc_d as printed, entered by hand.
std::map<unsigned, P> printed_wcyc_table() {
    std::map<unsigned, P> m;
    m[1] = t();
    m[2] = t() + P(2) * (P(1) + q());
    m[3] = tp(2) + (P(3) + P(3) * q()) * t() + P(3) * (P(1) + q() + qp(2));
    m[4] = tp(2) + (P(2) + P(2) * q()) * t() + P(2) * (P(1) + qp(2));
    m[5] = tp(4) + (P(5) + P(5) * q()) * tp(3) + (P(10) + P(15) * q() + P(10) * qp(2)) * tp(2) +
           (P(10) + P(15) * q() + P(15) * qp(2) + P(10) * qp(3)) * t() +
           P(5) * (P(1) + q() + qp(2) + qp(3) + qp(4));
    m[6] = tp(2) + (P(1) + q()) * t() + (P(1) - q() + qp(2));
    m[8] = tp(4) + (P(4) + P(4) * q()) * tp(3) + (P(6) + P(8) * q() + P(6) * qp(2)) * tp(2) +
           (P(4) + P(4) * q() + P(4) * qp(2) + P(4) * qp(3)) * t() + P(2) * (P(1) + qp(4));
    m[9] = tp(6) + (P(6) + P(6) * q()) * tp(5) + (P(15) + P(24) * q() + P(15) * qp(2)) * tp(4) +
           (P(21) + P(36) * q() + P(36) * qp(2) + P(21) * qp(3)) * tp(3) +
           (P(18) + P(27) * q() + P(27) * qp(2) + P(27) * qp(3) + P(18) * qp(4)) * tp(2) +
           (P(9) + P(9) * q() + P(9) * qp(2) + P(9) * qp(3) + P(9) * qp(4) + P(9) * qp(5)) * t() +
           P(3) * (P(1) + qp(3) + qp(6));
    m[10] = tp(4) + (P(3) + P(3) * q()) * tp(3) + (P(4) + P(3) * q() + P(4) * qp(2)) * tp(2) +
            (P(2) + q() + qp(2) + P(2) * qp(3)) * t() + (P(1) - q() + qp(2) - qp(3) + qp(4));
    m[12] = tp(4) + (P(4) + P(4) * q()) * tp(3) + (P(5) + P(8) * q() + P(5) * qp(2)) * tp(2) +
            (P(2) + P(2) * q() + P(2) * qp(2) + P(2) * qp(3)) * t() + (P(1) - qp(2) + qp(4));
    return m;
}

std::string str(const Chips& c) { return Configuration{{}, c}.to_string(); }

template <typename... Args>
std::string cat(Args&&... args) {
    std::ostringstream os;
    (os << ... << args);
    return os.str();
}

std::string big(const BigInt& v) { return to_decimal(v); }

// The parameter grid shared by the chip-firing sweeps.
std::vector<WheelParams> census_grid(unsigned kmax) {
    std::vector<WheelParams> g;
    for (unsigned k = 1; k <= kmax; ++k)
        for (std::int64_t qq = 1; qq <= 3; ++qq)
            for (std::int64_t tt = 1; tt <= 3; ++tt) g.push_back({k, qq, tt});
    return g;
}

Outcome check_wcyc_table(const VerifyOptions&) {
    const auto table = printed_wcyc_table();
    for (const auto& [d, expected] : table) {
        const P got = wcyc(d);
        if (got != expected) return {cat("WCyc_", d, " computed ", got.to_string(), " printed ", expected.to_string()), ""};
    }
    return {"", cat(table.size(), " polynomials match")};
}

Outcome check_worked_sum(const VerifyOptions&) {
    const WheelParams w3{3, 3, 2}, w6{6, 3, 2};
    const auto a = make_configuration(w3, {2, 4, 2}), b = make_configuration(w3, {0, 4, 1});
    if (!is_critical(a) || !is_critical(b)) return {"summands are not critical", ""};
    const auto sum = group_add(a, b);
    if (sum.chips != Chips{1, 0, 4}) return {"[2,4,2]+[0,4,1] = " + sum.to_string(), ""};
    const auto ea = embed(a, 6), eb = embed(b, 6);
    if (ea.chips != Chips{2, 4, 2, 2, 4, 2}) return {"embed([2,4,2]) = " + ea.to_string(), ""};
    if (ea.params != w6) return {"embedding lands in the wrong wheel", ""};
    const auto sum6 = group_add(ea, eb);
    if (sum6.chips != Chips{1, 0, 4, 1, 0, 4}) return {"lifted sum = " + sum6.to_string(), ""};
    if (sum6 != embed(sum, 6)) return {"embedding is not additive on the example", ""};
    return {"", "[1,0,4] and [1,0,4,1,0,4]"};
}

Outcome check_reciprocity(const VerifyOptions&) {
    for (unsigned k = 1; k <= 10; ++k) {
        const P nk = nk_poly(k);
        const P w = wheel_poly(k);
        if (nk != -w.negate_second()) return {cat("N_", k, " != -W_", k, "(q,-N1)"), ""};
        if (nk != nk_via_detmk(k)) return {cat("N_", k, " != -det M_", k), ""};
        if (w != enumerate_weighted_trees(k)) return {cat("tree enumeration disagrees with det at k=", k), ""};
        if (w != det_cofactor(reduced_laplacian_symbolic(k))) return {cat("cofactor det disagrees at k=", k), ""};
    }
    return {"", "k = 1..10 symbolic"};
}

Outcome check_census(const VerifyOptions& opts) {
    std::size_t vectors = 0, groups = 0;
    for (const auto& p : census_grid(opts.kmax)) {
        const auto g = enumerate_criticals(p);
        const BigInt expected = wheel_poly(p.k).eval(p.q, p.t);
        if (g.order() != expected) return {cat("|K(W", p.to_string(), ")| = ", big(g.order()), " expected ", big(expected)), ""};
        ++groups;
        const std::int64_t top = p.q + p.t;
        Configuration c{p, Chips(p.k, 0)};
        for (;;) {
            ++vectors;
            if (is_critical_blocks(c) != is_critical_dynamic(c))
                return {cat("block and orbit tests disagree on ", c.to_string(), " in ", p.to_string()), ""};
            std::size_t i = p.k;
            while (i > 0 && c.chips[i - 1] == top) c.chips[--i] = 0;
            if (i == 0) break;
            ++c.chips[i - 1];
        }
    }
    return {"", cat(groups, " groups, ", vectors, " stable vectors")};
}

Outcome check_bijection(const VerifyOptions& opts) {
    std::size_t groups = 0;
    for (const auto& p : census_grid(opts.kmax)) {
        const auto g = enumerate_criticals(p);
        std::set<SpanningTree> images;
        // Skeleton: spoke vertices and arc edges without labels.
        std::map<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>, std::pair<P, BigInt>> skeletons;
        for (const auto& c : g.elements) {
            const auto tr = config_to_tree(c);
            if (!is_valid_tree(tr)) return {"invalid tree for " + c.to_string(), ""};
            if (tr.spoke_count() != static_cast<std::size_t>(std::count_if(c.chips.begin(), c.chips.end(), [&](auto x) { return x > p.q; })))
                return {"spoke count mismatch for " + c.to_string(), ""};
            if (tree_to_config(tr) != c) return {"round trip fails for " + c.to_string(), ""};
            images.insert(tr);
            std::vector<std::size_t> sv, av;
            for (const auto& s : tr.spokes) sv.push_back(s.vertex);
            for (const auto& a : tr.arcs) av.push_back(a.to);
            auto& entry = skeletons[{sv, av}];
            entry.first = P::monomial(1, tree_dist(tr), static_cast<unsigned>(tr.spoke_count()));
            entry.second += 1;
        }
        if (images.size() != g.elements.size()) return {"config_to_tree is not injective on " + p.to_string(), ""};
        P total;
        for (const auto& [sk, entry] : skeletons) {
            total += entry.first;
            if (entry.first.eval(p.q, p.t) != entry.second)
                return {cat("skeleton preimage count ", big(entry.second), " != weight ", entry.first.to_string(), " in ", p.to_string()), ""};
        }
        if (total != wheel_poly(p.k)) return {"skeleton weights do not sum to W_k for " + p.to_string(), ""};
        ++groups;
    }
    return {"", cat(groups, " groups")};
}

Outcome check_quadratic(const VerifyOptions& opts) {
    std::size_t elements = 0;
    for (const auto& p : census_grid(opts.kmax)) {
        const auto rep = verify_quadratic(p);
        if (!rep.holds) return {"relation fails on " + rep.witness->to_string() + " in " + p.to_string(), ""};
        elements += rep.checked;
    }
    return {"", cat(elements, " elements")};
}

Outcome check_cyclotomic_kernels(const VerifyOptions&) {
    const unsigned ds[] = {1, 2, 3, 4, 6};
    std::size_t cases = 0;
    for (std::int64_t qq = 1; qq <= 2; ++qq)
        for (std::int64_t tt = 1; tt <= 2; ++tt) {
            for (unsigned d : ds) {
                const auto kc = verify_wcyc_kernel(d, qq, tt);
                if (!kc.matches())
                    return {cat("|Ker Cyc_", d, "| = ", big(kc.kernel_size), " vs WCyc = ", big(kc.expected), " at q=", qq, " t=", tt), ""};
                ++cases;
            }
            for (unsigned k : ds) {
                const auto g = enumerate_criticals({k, qq, tt});
                BigInt prod = 1;
                for (unsigned d : divisors(k)) prod *= static_cast<unsigned long>(kernel_of_rho_poly(cyclotomic(d), g).size());
                if (prod != g.order())
                    return {cat("kernel product ", big(prod), " != |K(W_", k, ")| = ", big(g.order()), " at q=", qq, " t=", tt), ""};
            }
        }
    return {"", cat(cases, " kernel counts, product identity on k in {1,2,3,4,6}")};
}

Outcome check_embeddings(const VerifyOptions&) {
    const std::pair<unsigned, unsigned> pairs[] = {{1, 2}, {1, 3}, {2, 4}, {3, 6}, {2, 6}};
    std::size_t cases = 0;
    for (std::int64_t qq = 1; qq <= 2; ++qq)
        for (std::int64_t tt = 1; tt <= 2; ++tt)
            for (const auto& [k1, k2] : pairs) {
                const auto g1 = enumerate_criticals({k1, qq, tt});
                const auto g2 = enumerate_criticals({k2, qq, tt});
                std::set<Configuration> image;
                for (const auto& c : g1.elements) {
                    const auto e = embed(c, k2);
                    if (!g2.contains(e)) return {"embedded element is not critical: " + e.to_string(), ""};
                    image.insert(e);
                }
                if (image.size() != g1.elements.size()) return {cat("embed W_", k1, " -> W_", k2, " not injective"), ""};
                for (const auto& a : g1.elements)
                    for (const auto& b : g1.elements)
                        if (embed(group_add(a, b), k2) != group_add(embed(a, k2), embed(b, k2)))
                            return {"embed is not additive on " + a.to_string() + ", " + b.to_string(), ""};
                std::vector<BigInt> rel(k1 + 1, BigInt(0));
                rel[0] = 1;
                rel[k1] = -1;
                const auto ker = kernel_of_rho_poly(IntPolynomial(rel), g2);
                if (std::set<Configuration>(ker.begin(), ker.end()) != image)
                    return {cat("Ker(1-rho^", k1, ") in K(W_", k2, ") differs from the embedded image"), ""};
                ++cases;
            }
    return {"", cat(cases, " (k1,k2,q,t) cases")};
}

Outcome check_structure(const VerifyOptions&) {
    if (wheel_group_invariants({3, 1, 1}).invariant_factors != std::vector<BigInt>{1, 4, 4})
        return {"W_3(1,1) invariants are not (1,4,4)", ""};
    for (unsigned k = 3; k <= 8; ++k) {
        const PolyMatrix two = wheel_two_by_two(k);
        if (normalize_wheel_reduction(gensmith_reduce(wheel_gensmith_input(k))) != two)
            return {cat("reduced presentation does not normalize to the two-generator matrix at k=", k), ""};
        const P det = det_poly(two), w = wheel_poly(k);
        if (det != w && det != -w) return {cat("det of the 2x2 presentation != +-W_", k), ""};
        for (std::int64_t qq = 1; qq <= 3; ++qq)
            for (std::int64_t tt = 1; tt <= 3; ++tt) {
                const WheelParams p{k, qq, tt};
                const auto full = wheel_group_invariants(p);
                const auto small = smith_normal_form_padded(evaluate(two, qq, tt), k - 2);
                if (full != small) return {"2x2 presentation SNF differs at " + p.to_string(), ""};
                const auto general = smith_normal_form(evaluate(gensmith_full_matrix(wheel_gensmith_input(k)), qq, tt));
                if (general != full) return {"generalized matrix SNF differs at " + p.to_string(), ""};
                if (full.nontrivial().size() > 2) return {"more than two nontrivial factors at " + p.to_string(), ""};
                if (full.product() != w.eval(qq, tt)) return {"SNF product != W_k at " + p.to_string(), ""};
                if (!full.divisibility_chain_holds()) return {"divisibility chain broken at " + p.to_string(), ""};
            }
    }
    return {"", "k = 3..8, q,t = 1..3; W_3(1,1) = Z/4 x Z/4"};
}

Outcome check_deformed(const VerifyOptions&) {
    for (unsigned k = 2; k <= 8; ++k)
        if (normalize_deformed_reduction(gensmith_reduce(deformed_gensmith_input(k))) != deformed_two_by_two(k))
            return {cat("deformed reduction does not normalize at k=", k), ""};
    std::size_t cases = 0;
    for (unsigned k = 1; k <= 8; ++k)
        for (std::int64_t qq = 1; qq <= 5; ++qq)
            for (std::int64_t tt = 1; tt <= 5; ++tt) {
                const WheelParams p{k, qq, tt};
                const auto inv = deformed_wheel_invariants(p);
                if (inv.d1 != inv.predicted_d1)
                    return {cat("d1 = ", big(inv.d1), " but gcd(t,Q_k) = ", big(inv.predicted_d1), " at ", p.to_string()), ""};
                if (inv.snf.nontrivial().size() > 2) return {"more than two nontrivial factors at " + p.to_string(), ""};
                if (qq == 1 && tt == 1 && !inv.cyclic()) return {"not cyclic at (1,1), k=" + std::to_string(k), ""};
                ++cases;
            }
    return {"", cat(cases, " grid points")};
}

Outcome check_curves(const VerifyOptions&) {
    struct Curve {
        std::uint32_t p;
        std::int64_t a, b;
    };
    const Curve curves[] = {{5, 1, 1}, {5, 2, 1}, {7, 1, 3}, {7, 3, 2}};
    std::string summary;
    for (const auto& cv : curves) {
        const auto tag = cat("y^2=x^3+", cv.a, "x+", cv.b, "/F_", cv.p);
        const BigInt n1 = ec_count(curve_over(cv.p, cv.a, cv.b, 1));
        if (!hasse_bound_holds(cv.p, n1)) return {"Hasse bound fails for " + tag, ""};
        std::vector<BigInt> nk{0};
        for (unsigned k = 1; k <= 3; ++k) {
            const BigInt n = ec_count(curve_over(cv.p, cv.a, cv.b, k));
            nk.push_back(n);
            const BigInt predicted = nk_value(cv.p, n1, k);
            if (n != predicted) return {cat(tag, ": N_", k, " = ", big(n), " but recurrence gives ", big(predicted)), ""};
            std::uint64_t qk = 1;
            for (unsigned i = 0; i < k; ++i) qk *= cv.p;
            if (!hasse_bound_holds(qk, n)) return {cat(tag, ": Hasse bound fails at k=", k), ""};
            const auto rep = coker_mk_compare(cv.p, cv.a, cv.b, k);
            if (!rep.order_matches) return {cat(tag, ": |det M_", k, "| = ", big(rep.det_mk), " != N_k"), ""};
            BigInt prod = 1;
            for (unsigned d : divisors(k)) {
                const BigInt ker = kernel_cyc_frobenius(cv.p, cv.a, cv.b, d);
                const BigInt expected = ecyc(d).eval(cv.p, n1);
                if (ker != expected) return {cat(tag, ": |Ker Cyc_", d, "(pi)| = ", big(ker), " vs ECyc = ", big(expected)), ""};
                prod *= ker;
            }
            if (prod != n) return {cat(tag, ": kernel product != N_", k), ""};
            if (!characteristic_equation_holds(cv.p, cv.a, cv.b, k)) return {cat(tag, ": characteristic equation fails at k=", k), ""};
        }
        for (unsigned m : {2u, 3u})
            if (frobenius_fixed_count(cv.p, cv.a, cv.b, 1, m) != n1) return {cat(tag, ": pi fixes the wrong number of points in degree ", m), ""};
        if (cv.p == 5 && cv.a == 1 && cv.b == 1 && (nk[1] != 9 || nk[2] != 27 || nk[3] != 108))
            return {"reference curve counts differ from 9, 27, 108", ""};
        summary += (summary.empty() ? "" : "; ") + tag + " N=" + big(nk[1]) + "," + big(nk[2]) + "," + big(nk[3]);
    }
    return {"", summary};
}

Outcome check_language(const VerifyOptions&) {
    if (!zeta_language().equivalent(zeta_language_detform())) return {"det-form quotient differs from the closed form", ""};
    const auto counts = log_series_counts(zeta_language(), 8);
    for (unsigned k = 1; k <= 8; ++k) {
        if (counts[k - 1] != wheel_poly(k)) return {cat("log-series coefficient ", k, " != W_", k), ""};
        if (word_count_symbolic(k) != wheel_poly(k)) return {cat("trace count != W_", k), ""};
    }
    const auto expanded = series_expand(zeta_language(), 8);
    if (exp_from_counts(counts, 8) != expanded) return {"exp of the counts does not reproduce the series", ""};
    if (!reciprocity_holds()) return {"zeta_L * Z_E(N1=-t) != 1", ""};
    std::size_t scans = 0;
    for (unsigned k = 1; k <= 4; ++k)
        for (std::int64_t qq = 1; qq <= 3; ++qq)
            for (std::int64_t tt = 1; tt <= 3; ++tt) {
                const BigInt scanned(static_cast<unsigned long>(word_count_scan(k, qq, tt)));
                if (scanned != word_count(k, qq, tt) || scanned != wheel_poly(k).eval(qq, tt))
                    return {cat("word scan mismatch at k=", k, " q=", qq, " t=", tt), ""};
                ++scans;
            }
    return {"", cat("order 8 symbolic; ", scans, " word scans")};
}

// Random bivariate polynomial with small coefficients and degrees.
P random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(0, 4), deg(0, 3), coef(-5, 5);
    P::TermMap m;
    for (int i = nterms(rng); i > 0; --i) m[Exponent{static_cast<unsigned>(deg(rng)), static_cast<unsigned>(deg(rng))}] += coef(rng);
    return P::from_terms(std::move(m));
}

Outcome check_properties(const VerifyOptions& opts) {
    std::mt19937_64 rng(opts.seed);
    const unsigned n = opts.property_cases;
    // Stabilization does not depend on the firing order.
    for (unsigned i = 0; i < n; ++i) {
        std::uniform_int_distribution<int> kd(1, 6), qd(0, 3), td(1, 3);
        const WheelParams p{static_cast<unsigned>(kd(rng)), qd(rng), td(rng)};
        std::uniform_int_distribution<std::int64_t> cd(0, 4 * (p.q + p.t));
        Configuration c{p, Chips(p.k)};
        for (auto& x : c.chips) x = cd(rng);
        const auto lo = stabilize(c, FiringPolicy::LowestIndex);
        const auto hi = stabilize(c, FiringPolicy::HighestIndex);
        Configuration rnd = c;
        for (;;) {
            std::vector<std::size_t> ready;
            for (std::size_t v = 0; v < p.k; ++v)
                if (rnd.chips[v] >= 1 + p.q + p.t) ready.push_back(v + 1);
            if (ready.empty()) break;
            rnd = fire(rnd, ready[std::uniform_int_distribution<std::size_t>(0, ready.size() - 1)(rng)]);
        }
        if (lo != hi || lo != rnd) return {"stabilization depends on firing order for " + c.to_string(), ""};
    }
    // Polynomial ring axioms and exact division.
    for (unsigned i = 0; i < n; ++i) {
        const P a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        if (a + b != b + a || a * b != b * a) return {"commutativity fails", ""};
        if ((a + b) + c != a + (b + c) || (a * b) * c != a * (b * c)) return {"associativity fails", ""};
        if (a * (b + c) != a * b + a * c) return {"distributivity fails", ""};
        if (a + P(0) != a || a * P(1) != a || a - a != P(0)) return {"identity elements fail", ""};
        if (!b.is_zero() && exact_div(a * b, b) != a) return {"exact division fails", ""};
        const BigInt x = std::uniform_int_distribution<int>(-4, 4)(rng), y = std::uniform_int_distribution<int>(-4, 4)(rng);
        if ((a * b).eval(x, y) != a.eval(x, y) * b.eval(x, y)) return {"evaluation is not multiplicative", ""};
    }
    // Smith normal form divisibility chain and determinant.
    for (unsigned i = 0; i < n; ++i) {
        std::uniform_int_distribution<int> sd(1, 5), ed(-9, 9);
        const std::size_t r = sd(rng), cc = sd(rng);
        IntMatrix m(r, cc);
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t b = 0; b < cc; ++b) m(a, b) = ed(rng);
        const auto s = smith_normal_form(m);
        if (!s.divisibility_chain_holds()) return {"SNF divisibility chain fails", ""};
        if (r == cc) {
            const BigInt d = abs(det_bareiss(m));
            if (d != 0 && s.product() != d) return {"SNF product != |det|", ""};
            if (d != det_cofactor(m) && d != -det_cofactor(m)) return {"Bareiss and cofactor determinants differ", ""};
        }
    }
    // prod_{d|m} Cyc_d(x) = x^m - 1.
    for (unsigned i = 0; i < n; ++i) {
        const unsigned m = std::uniform_int_distribution<unsigned>(1, 60)(rng);
        IntPolynomial prod = IntPolynomial::constant(1);
        for (unsigned d : divisors(m)) prod *= cyclotomic(d);
        if (prod != IntPolynomial::monomial(1, m) - IntPolynomial::constant(1)) return {cat("cyclotomic product fails at ", m), ""};
    }
    return {"", cat(n, " cases in each of 4 suites, seed ", opts.seed)};
}

struct Entry {
    CheckInfo info;
    std::function<Outcome(const VerifyOptions&)> fn;
};

const std::vector<Entry>& entries() {
    static const std::vector<Entry> e = {
        {{1, "wcyc-table", 5}, check_wcyc_table},
        {{2, "worked-sum", 1}, check_worked_sum},
        {{3, "nk-reciprocity", 10}, check_reciprocity},
        {{4, "critical-census", 60}, check_census},
        {{5, "tree-bijection", 60}, check_bijection},
        {{6, "shift-quadratic", 60}, check_quadratic},
        {{7, "cyclotomic-kernels", 300}, check_cyclotomic_kernels},
        {{8, "embeddings", 60}, check_embeddings},
        {{9, "two-generator-snf", 30}, check_structure},
        {{10, "deformed-cyclicity", 30}, check_deformed},
        {{11, "elliptic-curves", 120}, check_curves},
        {{12, "language-zeta", 120}, check_language},
        {{13, "property-suites", 120}, check_properties},
    };
    return e;
}

} // namespace

const std::vector<CheckInfo>& check_catalog() {
    static const std::vector<CheckInfo> c = [] {
        std::vector<CheckInfo> v;
        for (const auto& e : entries()) v.push_back(e.info);
        return v;
    }();
    return c;
}

CheckResult run_check(int id, const VerifyOptions& opts) {
    for (const auto& e : entries()) {
        if (e.info.id != id) continue;
        CheckResult r{id, e.info.name, false, "", 0, e.info.limit_seconds};
        const auto start = std::chrono::steady_clock::now();
        try {
            const Outcome o = e.fn(opts);
            r.passed = o.failure.empty();
            r.detail = r.passed ? o.summary : o.failure;
        } catch (const std::exception& ex) {
            r.detail = std::string("exception: ") + ex.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (r.passed && r.seconds >= r.limit_seconds) {
            r.passed = false;
            r.detail += cat(" (exceeded time limit)");
        }
        return r;
    }
    throw InvalidArgument("unknown check id " + std::to_string(id));
}

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opts) {
    std::vector<int> ids;
    if (suite == "all") {
        for (const auto& e : entries()) ids.push_back(e.info.id);
    } else {
        std::stringstream ss(suite);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            int found = 0;
            for (const auto& e : entries())
                if (tok == e.info.name || tok == std::to_string(e.info.id)) found = e.info.id;
            if (!found) throw InvalidArgument("unknown check '" + tok + "'");
            ids.push_back(found);
        }
    }
    std::vector<CheckResult> out;
    for (int id : ids) out.push_back(run_check(id, opts));
    return out;
}

std::string format_result_line(const CheckResult& r) {
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs < %.0fs", r.seconds, r.limit_seconds);
    return cat(r.passed ? "PASS" : "FAIL", "  ", r.id, " ", r.name, " [", timing, "] ", r.detail);
}

} // namespace wheelzeta

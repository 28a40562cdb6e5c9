#include "doctest.h"

#include "wheelzeta/errors.hpp"
#include "wheelzeta/shiftfrob.hpp"
#include "wheelzeta/wheel.hpp"

#include <set>

using namespace wheelzeta;

TEST_CASE("rotation") {
    const auto c = make_configuration({3, 3, 2}, {1, 0, 4});
    CHECK(rotate(c).chips == Chips{0, 4, 1});
    CHECK(rotate(c, 3) == c);
    CHECK(rotate(c, -1).chips == Chips{4, 1, 0});
    const auto g = enumerate_criticals({3, 3, 2});
    for (const auto& e : g.elements) CHECK(g.contains(rotate(e)));
    // rho is an automorphism.
    for (std::size_t i = 0; i < g.elements.size(); i += 9)
        for (std::size_t j = 0; j < g.elements.size(); j += 13)
            CHECK(rotate(group_add(g.elements[i], g.elements[j])) == group_add(rotate(g.elements[i]), rotate(g.elements[j])));
}

TEST_CASE("embedding") {
    const auto c = make_configuration({3, 3, 2}, {2, 4, 2});
    CHECK(embed(c, 6).chips == Chips{2, 4, 2, 2, 4, 2});
    CHECK_THROWS_AS(embed(c, 4), InvalidArgument);
    const auto g2 = enumerate_criticals({2, 3, 2});
    const auto g4 = enumerate_criticals({4, 3, 2});
    std::set<Configuration> image;
    for (const auto& e : g2.elements) {
        CHECK(g4.contains(embed(e, 4)));
        image.insert(embed(e, 4));
    }
    CHECK(image.size() == g2.elements.size());
}

TEST_CASE("kernels of polynomials in rho") {
    const auto g6 = enumerate_criticals({6, 3, 2});
    const auto ker = kernel_of_rho_poly(IntPolynomial{1, 0, 0, -1}, g6);
    CHECK(ker.size() == 134);
    for (const auto& c : ker) CHECK(rotate(c, 3) == c);
    CHECK(kernel_of_rho_poly(IntPolynomial{1, -1}, WheelParams{4, 2, 3}).size() == 3);
    CHECK(kernel_of_rho_poly(IntPolynomial{1, 1}, WheelParams{2, 1, 1}).size() == 5);
    const auto kc = verify_wcyc_kernel(3, 1, 1);
    CHECK(kc.kernel_size == 16);
    CHECK(kc.matches());
    CHECK(verify_wcyc_kernel(2, 1, 1).kernel_size == 5);
    CHECK(verify_wcyc_kernel(1, 2, 3).kernel_size == 3);
    CHECK(verify_wcyc_kernel(4, 2, 1).matches());
    CHECK_THROWS_AS(verify_wcyc_kernel(9, 3, 3, 1000), ResourceLimit);
}

TEST_CASE("negative coefficients agree with group inverses") {
    const auto g = enumerate_criticals({4, 1, 2});
    const IntPolynomial p{2, -3, 0, 1};
    for (std::size_t i = 0; i < g.elements.size(); i += 7) {
        const auto& c = g.elements[i];
        Configuration viaGroup = group_add(group_scalar(2, c), group_inverse(group_scalar(3, rotate(c))));
        viaGroup = group_add(viaGroup, rotate(c, 3));
        CHECK(apply_rho_poly(p, c) == viaGroup);
    }
}

TEST_CASE("quadratic relation") {
    const auto rep = verify_quadratic(WheelParams{3, 3, 2});
    CHECK(rep.holds);
    CHECK(rep.checked == 134);
    CHECK(verify_quadratic(WheelParams{1, 2, 5}).holds);
    // A wrong relation is caught with a witness.
    const auto g = enumerate_criticals({3, 3, 2});
    bool found = false;
    for (const auto& c : g.elements)
        if (apply_rho_poly(IntPolynomial{1, -1}, c) != g.identity) found = true;
    CHECK(found);
}

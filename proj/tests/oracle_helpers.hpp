#pragma once

#include "oracle_values.inc"
#include "wheelzeta/bivariate.hpp"

#include <vector>

inline wheelzeta::BivariatePolynomial from_oracle(const std::vector<oracle::Term>& terms) {
    wheelzeta::BivariatePolynomial::TermMap m;
    for (const auto& term : terms) m[{term.eq, term.et}] += term.c;
    return wheelzeta::BivariatePolynomial::from_terms(std::move(m));
}

#!/usr/bin/env python3
"""Independent reference values for the unit tests.

Everything here is computed with sympy and plain Python, sharing no code
with the C++ library. Run from the repository root:

    python3 tests/oracle/gen_oracle.py > tests/oracle_values.inc
"""
import itertools

import sympy as sp
from sympy.matrices.normalforms import smith_normal_form

q, t, n1, T = sp.symbols("q t n1 T")


def laplacian_reduced(k, qq, tt):
    # Multigraph adjacency over hub 0 and rim 1..k, then delete the hub.
    n = k + 1
    adj = [[0] * n for _ in range(n)]
    for i in range(1, k + 1):
        adj[0][i] += tt
        adj[i][0] += tt
        nxt = i % k + 1
        prv = (i - 2) % k + 1
        if nxt != i:
            adj[i][nxt] += qq
        if prv != i:
            adj[i][prv] += 1
    lap = sp.zeros(n, n)
    for i in range(n):
        for j in range(n):
            if i != j:
                lap[i, j] = -adj[i][j]
        lap[i, i] = sum(adj[i][j] for j in range(n) if j != i)
    return lap[1:, 1:]


def wheel_det(k):
    return sp.expand(laplacian_reduced(k, q, t).det(method="berkowitz"))


def stabilize(c, qq, tt):
    c = list(c)
    k = len(c)
    while True:
        for i in range(k):
            if c[i] >= 1 + qq + tt:
                c[i] -= 1 + qq + tt
                c[(i + 1) % k] += qq
                c[(i - 1) % k] += 1
                break
        else:
            return c


def criticalize(c, qq, tt):
    cur = stabilize(c, qq, tt)
    seen = []
    while cur not in seen:
        seen.append(cur)
        cur = stabilize([x + tt for x in cur], qq, tt)
    return cur


def is_critical(c, qq, tt):
    if any(x < 0 or x > qq + tt for x in c):
        return False
    return criticalize(c, qq, tt) == list(c)


def count_criticals(k, qq, tt):
    return sum(is_critical(c, qq, tt) for c in itertools.product(range(qq + tt + 1), repeat=k))


def snf_diag(m):
    d = smith_normal_form(sp.Matrix(m), domain=sp.ZZ)
    return sorted(abs(d[i, i]) for i in range(min(d.shape)))


# Finite fields F_{p^n} as lists of coefficients, constant first.
def first_irreducible(p, n):
    x = sp.Symbol("x")
    for idx in range(p ** n):
        coeffs = [(idx // p ** i) % p for i in range(n)] + [1]
        poly = sp.Poly(list(reversed(coeffs)), x, modulus=p)
        if poly.is_irreducible:
            return coeffs


def field_elements(p, n):
    return list(itertools.product(range(p), repeat=n))


def fmul(a, b, mod, p):
    n = len(a)
    prod = [0] * (2 * n - 1)
    for i in range(n):
        for j in range(n):
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p
    for d in range(len(prod) - 1, n - 1, -1):
        lead = prod[d]
        if lead:
            for i in range(n + 1):
                prod[d - n + i] = (prod[d - n + i] - lead * mod[i]) % p
    return tuple(prod[:n])


def fadd(a, b, p):
    return tuple((x + y) % p for x, y in zip(a, b))


def point_count(p, a, b, n):
    mod = first_irreducible(p, n)
    elems = field_elements(p, n)
    squares = {}
    for y in elems:
        s = fmul(y, y, mod, p)
        squares[s] = squares.get(s, 0) + 1
    const = lambda v: tuple([v % p] + [0] * (n - 1))
    count = 1
    for x in elems:
        rhs = fadd(fadd(fmul(fmul(x, x, mod, p), x, mod, p), fmul(const(a), x, mod, p), p), const(b), p)
        count += squares.get(rhs, 0)
    return count


def cpp_poly(expr, second):
    """C++ initializer for a BivariatePolynomial via term triples."""
    poly = sp.Poly(sp.expand(expr), q, second)
    terms = sorted((m[0], m[1], int(c)) for m, c in zip(poly.monoms(), poly.coeffs()))
    return "{" + ", ".join("{%d, %d, %d}" % term for term in terms) + "}"


def main():
    out = []
    emit = out.append
    emit("// Generated by tests/oracle/gen_oracle.py; do not edit.")
    emit("#pragma once")
    emit("#include <array>")
    emit("#include <cstdint>")
    emit("#include <tuple>")
    emit("#include <vector>")
    emit("namespace oracle {")
    emit("struct Term { unsigned eq, et; long c; };")

    # Symbolic W_k and WCyc_d.
    wk = {k: wheel_det(k) for k in range(1, 9)}
    emit("inline const std::vector<std::vector<Term>> wheel_poly = {")
    for k in range(1, 9):
        emit("    " + cpp_poly(wk[k], t) + ",")
    emit("};")
    wcyc = {}
    for d in range(1, 9):
        rest = sp.Integer(1)
        for e in sp.divisors(d)[:-1]:
            rest *= wcyc[e]
        wcyc[d] = sp.expand(sp.cancel(wk[d] / rest))
    emit("inline const std::vector<std::vector<Term>> wcyc = {")
    for d in range(1, 9):
        emit("    " + cpp_poly(wcyc[d], t) + ",")
    emit("};")

    # N_k from the zeta function: log of Z(E,T).
    zeta = (1 - (1 + q - n1) * T + q * T ** 2) / ((1 - T) * (1 - q * T))
    logser = sp.series(sp.log(zeta), T, 0, 7).removeO()
    emit("inline const std::vector<std::vector<Term>> nk_poly = {")
    for k in range(1, 7):
        nk = sp.expand(logser.coeff(T, k) * k)
        emit("    " + cpp_poly(nk, n1) + ",")
    emit("};")

    # Critical group sizes by orbit test, (k, q, t, size).
    emit("inline const std::vector<std::array<long, 4>> critical_counts = {")
    for k in range(1, 5):
        for qq in range(0, 4):
            for tt in range(1, 4):
                emit("    {%d, %d, %d, %d}," % (k, qq, tt, count_criticals(k, qq, tt)))
    emit("};")

    # Group sums in K(W_3(3,2)) and K(W_4(1,2)).
    emit("inline const std::vector<std::tuple<std::array<long, 3>, std::vector<long>, std::vector<long>, std::vector<long>>> group_sums = {")
    for (k, qq, tt) in [(3, 3, 2), (4, 1, 2), (2, 0, 3)]:
        crit = [list(c) for c in itertools.product(range(qq + tt + 1), repeat=k) if is_critical(c, qq, tt)]
        for a, b in list(zip(crit[::7], crit[3::11]))[:6]:
            s = criticalize([x + y for x, y in zip(a, b)], qq, tt)
            emit("    {{%d, %d, %d}, {%s}, {%s}, {%s}}," % (k, qq, tt, ", ".join(map(str, a)),
                                                       ", ".join(map(str, b)), ", ".join(map(str, s))))
    emit("};")

    # Invariant factors, (k, q, t) -> factors.
    emit("inline const std::vector<std::tuple<std::array<long, 3>, std::vector<long>>> wheel_snf = {")
    for (k, qq, tt) in [(2, 3, 2), (3, 1, 1), (4, 1, 1), (5, 1, 1), (6, 1, 1), (3, 3, 2), (5, 2, 3), (6, 2, 2)]:
        emit("    {{%d, %d, %d}, {%s}}," % (k, qq, tt, ", ".join(str(x) for x in snf_diag(laplacian_reduced(k, qq, tt)))))
    emit("};")
    emit("inline const std::vector<std::tuple<std::array<long, 3>, std::vector<long>>> deformed_snf = {")
    for (k, qq, tt) in [(2, 2, 7), (3, 1, 2), (1, 1, 1), (4, 1, 1), (2, 3, 4), (3, 2, 3)]:
        m = laplacian_reduced(k + 1, qq, tt)
        m[0, 0] -= tt
        emit("    {{%d, %d, %d}, {%s}}," % (k, qq, tt, ", ".join(str(x) for x in snf_diag(m))))
    emit("};")

    # Point counts (p, a, b, n, N).
    emit("inline const std::vector<std::array<long, 5>> point_counts = {")
    for (p, a, b) in [(5, 1, 1), (5, 2, 1), (7, 1, 3), (7, 3, 2)]:
        for n in range(1, 4):
            emit("    {%d, %d, %d, %d, %d}," % (p, a, b, n, point_count(p, a, b, n)))
    emit("};")

    # Language zeta series coefficients at (q,t) = (2,1), order 8.
    zl = (1 - 2 * T) * (1 - T) / (1 - 4 * T + 2 * T ** 2)
    ser = sp.series(zl, T, 0, 9).removeO()
    emit("inline const std::vector<long> zeta_series_q2_t1 = {%s};" % ", ".join(str(ser.coeff(T, i)) for i in range(9)))
    emit("}  // namespace oracle")
    print("\n".join(out))


if __name__ == "__main__":
    main()

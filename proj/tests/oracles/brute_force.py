"""Independent exact-fraction oracle for the values frozen in the C++ tests.

Only Python's fractions module is used: binomials by falling-factorial
product, harmonic numbers by direct summation, Legendre values by the
three-term recurrence. Derivatives are written out by hand from logarithmic
derivatives rather than taken from jets.
"""
from fractions import Fraction as Fr
from math import comb, factorial


def binom(s, k):
    if k < 0:
        return Fr(0)
    r = Fr(1)
    for i in range(k):
        r *= Fr(s) - i
    return r / factorial(k)


def H(n, m=1):
    return sum((Fr(1, i**m) for i in range(1, n + 1)), Fr(0))


def legendre(n, x):
    p0, p1 = Fr(1), Fr(x)
    if n == 0:
        return p0
    for m in range(1, n):
        p0, p1 = p1, ((2 * m + 1) * x * p1 - m * p0) / (m + 1)
    return p1


# Values frozen in the C++ unit and acceptance tests.
FROZEN = {
    "H(4,2)": Fr(205, 144),
    "binom(3/2,2)": Fr(3, 8),
    "upper_shift(1/3,2)": Fr(14, 9),
    "digamma_diff(3,3)": Fr(11, 6),
    "P2(5/4)": Fr(59, 32),
    "ID03": Fr(19, 6),
    "ID06": Fr(187, 112),
    "ID07": Fr(3, 4),
    "ID15": Fr(-3, 16),
    "ID16": Fr(3, 2),
    "ID18": Fr(9, 4),
    "ID24": Fr(11, 2),
    "ID25": Fr(4),
    "ID22": Fr(2),
    "ID21": Fr(48),
    "ID09": Fr(1),
    "ID17 n=1": Fr(-1, 2),
    "ID17 n=2": Fr(-7, 16),
    "ID17 n=3": Fr(-37, 96),
    "thm1 certificate": Fr(-3, 11),
    "Al": Fr(4),
    "eq12 j=0": Fr(-5, 6),
    "ID26 1": Fr(2),
    "ID26 2": Fr(23, 2),
}

failures = []


def emit(label, *values):
    if isinstance(values[0], int) and len(values) > 1 and not isinstance(values[0], Fr):
        label = "%s %d" % (label, values[0])
        values = values[1:]
    print(label, *values)
    if any(v != values[0] for v in values):
        failures.append("%s: sides differ" % label)
    if label in FROZEN and FROZEN[label] != values[0]:
        failures.append("%s: %s != frozen %s" % (label, values[0], FROZEN[label]))


def main():
    emit("H(4,2)", H(4, 2))
    emit("binom(3/2,2)", binom(Fr(3, 2), 2))
    b = Fr(1, 3)
    emit("upper_shift(1/3,2)", (b + 1) * (b + 2) / 2)
    emit("digamma_diff(3,3)", sum(Fr(1, 3 - i) for i in range(3)))
    emit("P2(5/4)", legendre(2, Fr(5, 4)))
    n, a, bb, x = 1, Fr(1, 2), Fr(1, 3), Fr(2)
    lhs = sum(binom(a, n - k) * binom(bb + k, k) * x**k for k in range(n + 1))
    rhs = sum((-1) ** (n + k) * binom(bb - a + n, n - k) * binom(bb + k, k) * (x + 1) ** k
              for k in range(n + 1))
    emit("ID03", lhs, rhs)
    n, s, t = 2, Fr(1, 2), Fr(1, 3)
    lhs = sum(binom(n, k) * binom(s, k) / binom(t + k, k) for k in range(n + 1))
    rhs = Fr(1)
    for i in range(1, n + 1):
        rhs *= (s + t + i) / (t + i)
    emit("ID06", lhs, rhs)
    n, s, p = 2, Fr(1, 2), 1
    lhs = sum((-1) ** (n + k) * binom(n, k) * binom(s + k, k) * binom(k, p) for k in range(n + 1))
    emit("ID07", lhs, binom(n, p) * binom(s + p, n))
    lhs = sum((-1) ** (n + k) * binom(n, k) * binom(s + k, k) * H(k) for k in range(n + 1))
    dd = sum(Fr(1) / (s - i) for i in range(n))
    emit("ID15", lhs, binom(s, n) * (H(n) + dd))
    emit("ID16", H(2), Fr(1, 2) * sum((-1) ** (2 + k) * comb(2, k) * comb(2 + k, k) * H(k) for k in range(3)))
    emit("ID18", H(2) ** 2, Fr(1, 4) * sum((-1) ** (2 + k) * comb(2, k) * comb(2 + k, k) * (H(k) ** 2 + H(k, 2)) for k in range(3)))
    n = 2
    emit("ID24", sum(comb(n, k) ** 2 * H(k) for k in range(n + 1)), comb(2 * n, n) * (2 * H(n) - H(2 * n)))
    emit("ID25", sum(comb(n, k) ** 2 * H(k) * H(n - k) for k in range(n + 1)),
          comb(2 * n, n) * ((H(2 * n) - 2 * H(n)) ** 2 + H(n, 2) - H(2 * n, 2)))
    emit("ID22", sum(comb(2 * k, k) * H(n - k) / Fr(4) ** k for k in range(n + 1)),
          Fr(2 * n + 1, 4**n) * comb(2 * n, n) * (2 * H(2 * n + 1) - H(n) - 2))
    s = Fr(1, 2)
    lhs = sum(binom(s + k, k) * comb(2 * n - 2 * k, n - k) * 4**k for k in range(n + 1))
    shift = Fr(1)
    for i in range(1, 2 * n + 1):
        shift *= (2 * s + 1 + i)
    shift /= factorial(2 * n)
    emit("ID21", lhs, comb(2 * n, n) * shift / binom(n + s, n))
    b = Fr(1, 3)
    emit("ID09", sum((-1) ** k * comb(2, k) * binom(b + k, 2) for k in range(3)))
    for n in range(1, 4):
        s = Fr(-1, 2)
        lhs = sum((-1) ** k * comb(n, k) * comb(2 * k, k) * H(k) / Fr(4) ** k for k in range(1, n + 1))
        emit("ID17 n=%d" % n, lhs, Fr(1, 2 ** (2 * n - 1)) * comb(2 * n, n) * (H(n) - H(2 * n)))
    j, k, n, al, be = 0, 1, 1, Fr(1, 2), Fr(1, 3)
    emit("thm1 certificate", (j - k) * (al + k - n) / ((k - n - 1) * (al - be - n - 1)))
    # Alzer-Kouba at n=1, lambda=1
    n, lam = 1, Fr(1)
    rhs = binom(2 * lam, n) * sum(comb(n, k) * binom(n - lam - Fr(1, 2), k) / binom(k - lam - Fr(1, 2), k)
                                  for k in range(n + 1))
    emit("Al", 4**n * binom(lam, n), rhs)
    # Taylor coefficient j=0 at n=1, alpha=1/2, beta=1/3
    n, a, bb = 1, Fr(1, 2), Fr(1, 3)
    emit("eq12 j=0", sum((-1) ** k * binom(bb + k, k) * binom(a, n - k) for k in range(n + 1)),
          (-1) ** n * binom(bb - a + n, n))
    # ID26 at n=1,2
    for n in (1, 2):
        emit("ID26", n, sum(comb(n, k) ** 2 * (H(k) ** 2 + H(k, 2)) for k in range(n + 1)),
              comb(2 * n, n) * ((H(2 * n) - 2 * H(n)) ** 2 + 2 * H(n, 2) - H(2 * n, 2)))


if __name__ == "__main__":
    main()
    for f in failures:
        print("FAIL", f)
    raise SystemExit(1 if failures else 0)

"""Independent oracles for frozen expected values used by the C++ tests.

Run with: python3 tests/oracles/closed_forms.py
"""
from fractions import Fraction
from itertools import product
import math

import mpmath

mpmath.mp.dps = 40


def r1(n, big_n):
    return 2 * mpmath.exp(-(mpmath.mpf(4 * n) / big_n) ** 2)


print("r1(25,25) =", mpmath.nstr(r1(25, 25), 20))
print("r1(50,100) =", mpmath.nstr(r1(50, 100), 20))
for big_n in (1, 25, 100, 10**6):
    print("r1(N,N) N=%d =" % big_n, mpmath.nstr(r1(big_n, big_n), 20))

# Leader step, negative branch: food - r1*((upper-lower)*r2 + lower)
print("leader neg =", Fraction(3, 10) - Fraction(1, 2) * (1 * Fraction(1, 5) + 0))
print("leader pos midpoint =", 0 + 1 * (2 * Fraction(1, 2) - 1))

# Right-angle route 3 + 4 legs, mu = 1: 7 + (pi/2)^2
print("right angle cost =", mpmath.nstr(7 + (mpmath.pi / 2) ** 2, 20))

# Sign test, 10 wins / 0 losses, by exhaustive enumeration of 2^10 sign vectors.
n = 10
extreme = sum(1 for signs in product((0, 1), repeat=n)
              if min(sum(signs), n - sum(signs)) <= 0)
print("sign test p(10-0) =", Fraction(extreme, 2**n), float(Fraction(extreme, 2**n)))
# 7 wins / 3 losses
extreme = sum(1 for signs in product((0, 1), repeat=n)
              if min(sum(signs), n - sum(signs)) <= 3)
print("sign test p(7-3) =", Fraction(extreme, 2**n), float(Fraction(extreme, 2**n)))


# Segment (0,0,0)->(10,0,0) through sphere centre (5,0,0) radius 1:
# penetration integral = int max(0, 1 - |s - 5|) ds, by fine quadrature.
def pen(s):
    return max(mpmath.mpf(0), 1 - abs(s - 5))


print("sphere penetration integral =",
      mpmath.nstr(mpmath.quad(pen, [0, 4, 5, 6, 10]), 20))


# Segment vs sphere centre (5,1,0) r=2: distance from centre to segment by sampling.
def seg_dist(samples=10**5):
    best = math.inf
    for k in range(samples + 1):
        x = 10.0 * k / samples
        best = min(best, math.hypot(x - 5.0, 1.0))
    return best


print("sphere penetration (5,1,0) r=2 =", 2.0 - seg_dist())


# Dynamic obstacle x0=9, v=+1, bounds [0,10], t=3: small-step reflection.
def reflect_sim(x, v, lo, hi, t, dt=1e-4):
    steps = int(round(t / dt))
    for _ in range(steps):
        x += v * dt
        if x > hi:
            x = 2 * hi - x
            v = -v
        elif x < lo:
            x = 2 * lo - x
            v = -v
    return x


print("reflect x(3) =", reflect_sim(9.0, 1.0, 0.0, 10.0, 3.0))

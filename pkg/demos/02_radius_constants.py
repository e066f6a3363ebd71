"""
Radius constants
================

Each inequality holds up to a radius that is either a closed form or the
unique root in (0, 1) of an explicit polynomial.
"""
import math

from refined_bohr import radii
from refined_bohr.radii import RadiusQuery, solve

res = solve(RadiusQuery("thm1-r", N=1))
print(res.radius, math.sqrt(5) - 2, res.residual, res.root_count)

# R_N and R'_N grow with N
for N in range(1, 7):
    print(N, radii.radius("thm1-r", N=N), radii.radius("thm1-rsq", N=N))

# the derivative inequality and its numerically solved radius
print(radii.radius("thmf"), (math.sqrt(17) - 3) / 4)
print(radii.radius("thm7-j"))

# radii that move with |a0|
for a in (0.0, 0.5, 0.9):
    print(a, radii.radius("thm2", a0=a), radii.radius("thm2-sq", a0=a), 1 / (2 + a))

# the symmetric family at m = 0 collapses to a closed form
print(radii.radius("thm3", p=2, m=0, a0=0.5), (1 / 2.5) ** 0.5)

# a tangential root needs the double-root fallback
d = solve(RadiusQuery("thmd", p=1, m=0))
print(d.radius, d.method)

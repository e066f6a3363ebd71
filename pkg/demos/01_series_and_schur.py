"""
Truncated series and Schur-class functions
==========================================

Every function here is stored as its first K+1 Taylor coefficients plus a
recipe that can rebuild it exactly.  The bound |a_n| <= 1 - |a_0|^2 turns the
dropped terms into a rigorous tail.
"""
import numpy as np

from refined_bohr import schur, series

# a disk automorphism, (a - z)/(1 - a z)
phi = schur.moebius(0.5, "-", order=8)
print(phi.text())
print(np.round(phi.coeffs.real, 6))

# the same thing through the division pipeline
z = series.monomial(1, 8)
print(phi.series.allclose((0.5 - z) / (1 - 0.5 * z), atol=1e-15))

# point evaluation returns a value and a tail bound
ev = series.evaluate(schur.moebius(0.5, "-").series, 0.2)
print(ev.value, ev.tail)

# seeded draws from the three sampler profiles; at r = 0.99 the K = 256 tail
# bound is larger than 1, so only the grid maximum is informative there
for profile in schur.PROFILES:
    f = schur.sample(seed=1, profile=profile, order=256, index=0)
    m, tail = schur.grid_modulus(f, 0.99)
    print(f"{profile:13s} max|f| on r=0.99: {m:.6f}  (tail {tail:.1e})")

# recipes replay to the identical coefficient array
f = schur.sample(1, "blaschke", 256, 0)
print(np.array_equal(schur.replay(f.text()).coeffs, f.coeffs))

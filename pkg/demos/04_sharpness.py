"""
Sharpness witnesses
===================

Pushing r a little past a radius should break the inequality for some
member of the extremal family.  Values come from closed forms with a small
rounding pad, and a witness must clear 1 + 1e-12.
"""
from refined_bohr import certify
from refined_bohr.radii import RadiusQuery

cert = certify.certify_sharpness(RadiusQuery("thm2"))
for w in cert.witnesses:
    print(w.a, w.eps, w.r, w.value.lower)

# area weights: inflate lambda instead of r
cert = certify.certify_sharpness(RadiusQuery("thm4-first"))
print(cert.mode, [(w.a, w.lam, w.value.lower) for w in cert.witnesses])

# the |a0| hypothesis of the distance inequality is exact
for a, gap in certify.theorem5_sign_change():
    print(a, gap)

# past 1/5 the G functional fails once a exceeds a threshold
a_r = certify.threshold_a("thm6-g", 0.25)
print(a_r, certify.window_witness("thm6-g", 0.25, 0.99).value.lower)

# no positive weight works at r = 1/2 for f(z) = z
for c in (1e-6, 9 / 8, 10.0):
    print(certify.remark_thm4_counterexample(c).to_dict())

"""
Monte Carlo verification
========================

Draw seeded Schur functions, pick r in [0, radius] (or r = radius in edge
mode) and check that each functional stays below 1.  The margin is 1 minus
the upper enclosure.
"""
from refined_bohr import schur, verify
from refined_bohr.radii import RadiusQuery

rep = verify.run(RadiusQuery("thm1-r", N=3), trials=500, seed=7)
print(rep.passed, rep.worst_margin)

edge = verify.run("thmb", trials=300, seed=7, edge=True)
print(edge.passed, edge.worst_margin)

# the distance inequality needs a small |a0|; the sampler filters and says so
print(verify.run("thm5", trials=200, seed=9).params()["a0_filter"])

# a function outside that hypothesis breaks it at r = 1/3
bad = verify.run("thm5", trials=1, seed=0, functions=[schur.moebius(0.7, "-")], r=1 / 3)
print(bad.passed, bad.failures[0].to_dict())

# the lemma oracles over the documented (r, N) grids
print(verify.run_lemmas(trials=200, seed=42).passed)

# reports serialize to a fixed schema
print(rep.to_json())

"""
Cross-checking against brute force
==================================

The oracle scans every fraction over d^q - 1, keeps the rotational orbits,
and tests unions of them directly.
"""
# %%
from rotsets import RotationNumber, cross_check

for d, p, q in [(3, 1, 2), (4, 1, 4), (4, 2, 5), (5, 2, 3)]:
    r = cross_check(d, RotationNumber.of(p, q))
    print(d, f"{p}/{q}", r.orbits_found, r.sets_found_by_k, "ok" if r.ok else r.mismatches)

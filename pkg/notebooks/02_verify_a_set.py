"""
Checking a candidate set and splitting it into orbits
=====================================================
"""
# %%
from fractions import Fraction

from rotsets import detect_rotation, verify_set

pts = [Fraction(n, 26) for n in (8, 17, 20, 23, 24, 25)]
print(detect_rotation(3, pts))  # shift 4 over 6 points

# %%
s = verify_set(3, pts)
print("reduced rotation", s.reduced_rotation, "orbits", s.orbit_count)
for o in s.orbits:
    print(" ", [str(t) for t in o.angles], "least tuple", o.least_tuple)

# %%
# Consecutive points alternate between the two orbits.
label = {t: i for i, o in enumerate(s.orbits) for t in o.angles}
print([label[t] for t in s.angles])

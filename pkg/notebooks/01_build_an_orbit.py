"""
Building a rotational orbit from a representative sequence
==========================================================

Degree 4, rotation number 2/5. The inverse of 2 mod 5 is 3, so the digits
are filled in the order a_0, a_3, a_1, a_4, a_2.
"""
# %%
from rotsets import RotationNumber, orbit_from_rep, rep_to_least_tuple
from rotsets.enumeration import rep

rot = RotationNumber.of(2, 5)
print("p* =", rot.p_star)

# %%
# Bump the last p = 2 terms of the sequence, then place them at k*p* mod q.
seq = rep(4, [0, 1, 1, 1, 2])
T = rep_to_least_tuple(seq, rot)
print("least tuple", T)

# %%
orbit = orbit_from_rep(seq, rot)
den = 4**5 - 1
print([int(t * den) for t in orbit.angles], "/", den)
# 118/1023 is the least point; every point is a fraction over 4^5 - 1 = 1023.

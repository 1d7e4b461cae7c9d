"""
Counting rotational sets by number of orbits
============================================
"""
# %%
from rotsets import binomial_inversion_check, count_sets_closed, count_sets_recursive

for d in range(2, 7):
    print(d, count_sets_recursive(d, 4))

# %%
# The recursion and the alternating closed form agree because the two
# binomial matrices are inverse.
print(all(count_sets_recursive(d, q) == count_sets_closed(d, q) for d in range(2, 9) for q in range(2, 9)))
print(binomial_inversion_check(12))

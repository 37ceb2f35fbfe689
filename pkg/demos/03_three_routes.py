# %% [markdown]
# # Three independent routes to the same numbers
#
# Closed formulas, the Berezin integral, and Pieri-rule combinatorics must
# agree exactly.

# %%
from fermischubert import closed_forms as cf
from fermischubert import schubert
from fermischubert.grassmann import context_new
from fermischubert.oracle import oracle_intersection

for k, N in [(2, 5), (3, 6), (3, 7)]:
    ctx = context_new(k, N)
    d = k * (N - k)
    for pairs, formula in [(0, cf.theo1_sigma1_power), (1, cf.theo1_one_sigma2), (2, cf.theo1_two_sigma2)]:
        classes = [(1,)] * (d - 2 * pairs) + [(1, 1)] * pairs
        row = (formula(k, N), schubert.integrate_product(ctx, classes), oracle_intersection(k, N, classes))
        print(f"G({k},{N}) sigma_11^{pairs}:", *row)

# %% The pieces of P_2 computed directly and from their closed forms.
ctx = context_new(3, 7)
print(schubert.q_restricted(ctx))
print(cf.q_decomposition(3, 7), cf.prop1_p2(3, 7))

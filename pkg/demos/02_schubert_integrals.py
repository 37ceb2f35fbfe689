# %% [markdown]
# # Intersection numbers from fermion integrals
#
# Build omega^{ij}, the tau basis from det(I + t Phi), and integrate products
# of Schubert classes on G(k, N).

# %%
from fermischubert import schubert
from fermischubert.grassmann import context_new

ctx = context_new(2, 4)
om = schubert.omega_table(ctx)
taus = schubert.tau_basis(ctx)
print("omega^21 =", om[2, 1])
print("tau_2 terms:", len(taus[2]))

# %% det(Phi)^(N-k) integrates to the inverse of the normalization constant.
c = schubert.normalization_constant(2, 4)
print(c, c * (taus[2] ** 2).berezin())

# %% The degree of G(2,4), and a class beyond sigma_1 / sigma_{1,1}.
print(schubert.integrate_product(ctx, [(1,)] * 4))
print(schubert.integrate_product(ctx, [(2,), (2,)]))
print(schubert.schubert_class(ctx, taus, (2,)) == taus[1] * taus[1] - taus[2])

# %% Larger Grassmannians: sigma_1^8 sigma_{1,1}^2 on G(3,7).
big = context_new(3, 7)
print(schubert.integrate_product(big, [(1,)] * 8 + [(1, 1)] * 2))

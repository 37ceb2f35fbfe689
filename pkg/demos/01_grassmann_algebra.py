# %% [markdown]
# # Anticommuting variables as bit sets
#
# The fermionic model of G(2,4) has 2*2*(4-2) = 8 generators.  Monomials are
# integers whose set bits name the generators present.

# %%
from fermischubert.grassmann import Element, context_new, monomial_mul

ctx = context_new(2, 4)
print("generators:", ctx.dim_top)

# %% Swapping two generators flips the sign; repeating one kills the product.
print(monomial_mul(0b01, 0b10))   # (1, 0b11)
print(monomial_mul(0b10, 0b01))   # (-1, 0b11)
print(monomial_mul(0b100, 0b100)[0])  # 0

# %% Elements are sparse integer combinations; products stay exact.
x = ctx.psi(1, 1) + ctx.psibar(2, 2).scale(3)
y = ctx.psi(2, 1) - ctx.psibar(1, 1)
print(x * y)
print(y * x)

# %% [markdown]
# The Berezin integral reads the coefficient of the product of all generators.
# Because bits are laid out as psi_1^1 psibar_1^1 psi_1^2 psibar_1^2 ..., the
# reference top form integrates to +1 with no extra sign.

# %%
top = Element.monomial(ctx.top_mask, ctx.dim_top)
print("integral of top form:", top.berezin())

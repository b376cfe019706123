"""
Telling sign-differing states apart
===================================

A yes/no projector can separate two rays only when they are orthogonal.
The four-component states of the smallest pair overlap, so nothing
distinguishes them; the two-component states of the other pairs are
orthogonal and a 2x2 projector does the job.
"""

from parastat.chirality import (
    SIGN_PAIRS,
    brute_force_projector_oracle,
    discriminate,
    embed_observable,
    measure,
    sign_pair,
)
from parastat.multiparticle import space

# %%
# The smallest pair differs at E = l+1 but the rays overlap by 1/2.
u = space("fLS_sub").rays("l+1")[0]
v = space("pCLS_sub").rays("l+1")[0]
print(u, "vs", v, "->", discriminate(u, v))
print("general symmetric projector exists:", brute_force_projector_oracle((1, -1, 1, 1), (1, 1, 1, 1)))

# %%
# The other three pairs: a 2x2 projector on the shared support.
for pair in SIGN_PAIRS:
    for level in ("l+2", "2l+1"):
        ordinary, colored = sign_pair(pair, level)
        verdict = discriminate(ordinary, colored)
        obs = embed_observable(verdict.p_plus)
        support = [f"w{i + 1}" for i in verdict.p_plus.support]
        print(f"{pair:<17} E={level:<5} {str(ordinary):<9} {str(colored):<9} on {support}:"
              f" outcomes {measure(ordinary, obs)} / {measure(colored, obs)}")

# %%
# The embedded observable is an ordinary 00-graded 16x16 matrix.
print(embed_observable(discriminate(*sign_pair("LS_min/CLS_min", "l+2")).p_plus).matrix)

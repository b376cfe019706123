"""
Two-particle spectra
====================

Primitive generators act on two particles through the braided coproduct
g x 1 + 1 x g. Applying the lifted creation operators to the two-particle
vacuum spans the physical Hilbert space of each theory.
"""

from parastat.algebra import catalog
from parastat.grading import preset
from parastat.multiparticle import fingerprint, lift_primitive, pauli_coefficient, space

# %%
# Two identical quanta in the 10 sector: allowed or Pauli-blocked?
f1 = catalog("fLA_min").generators["f1+"]
for name in ("LA", "LS", "CLA", "CLS"):
    lifted = lift_primitive(f1, preset(name))
    print(name, "coefficient", pauli_coefficient(f1, preset(name)), "square vanishes:", (lifted @ lifted).is_zero())

# %%
# Spectra of the eight distinct spaces, grouped in spectrally identical pairs.
for a, b in (("fLS_sub", "pCLS_sub"), ("LS_min", "CLS_min"), ("fCLA_sub", "pLA_sub"), ("LA_min", "CLA_min")):
    fa, fb = fingerprint(space(a)), fingerprint(space(b))
    print(f"{a:>9} / {b:<9} dim {fa.dim}  same spectrum: {fa == fb}  {fa}")

# %%
# Same spectrum, different eigenvectors: the signs are the whole story.
for label in ("LS_min", "CLS_min"):
    print(f"--- {label}")
    print(space(label).format(), end="")

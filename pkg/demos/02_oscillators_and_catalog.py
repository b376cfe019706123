"""
Oscillators and spectrum-generating algebras
============================================

Two fermionic and two parafermionic oscillators live on the same 4-dim
space. Their creation operators, plus the Hamiltonian, generate twelve
small graded algebras depending on which sign form is used.
"""

from parastat.algebra import (
    LABELS,
    build_hamiltonian,
    build_oscillators,
    catalog,
    closure_check,
    graded_bracket,
    jacobi_check,
)
from parastat.grading import preset

# %%
# The two creation operators of each kind, and the shared Hamiltonian.
f = build_oscillators("fermionic")
p = build_oscillators("parafermionic")
print("f1+ =", f.a1d, sep="\n")
print("f2+ =", f.a2d, sep="\n")
print("p2+ =", p.a2d, sep="\n")
print("H_min =", build_hamiltonian(), sep="\n")

# %%
# The mixed modes anticommute for fermions and commute for parafermions.
print("{f1, f2+} = 0:", (f.a1 @ f.a2d + f.a2d @ f.a1).is_zero())
print("[p1, p2+] = 0:", (p.a1 @ p.a2d - p.a2d @ p.a1).is_zero())

# %%
# The same pair of matrices gives different brackets under different forms.
f3 = f.a1d @ f.a2d
print("LA : [f1+, f2+] == 2 f3+ :", graded_bracket(f.a1d, f.a2d, preset("LA")) == f3.scale(2))
print("CLA: {f1+, f2+} == 0     :", graded_bracket(f.a1d, f.a2d, preset("CLA")).is_zero())

# %%
# Every catalog entry closes and satisfies the graded Jacobi identity.
for label in LABELS:
    spec = catalog(label)
    consts = closure_check(spec).structure_constants
    nonzero = {f"({a},{b})": {k: str(v) for k, v in c.items()} for (a, b), c in consts.items() if c}
    ok = jacobi_check(spec.generators, spec.form).ok
    print(f"{label:<9} {spec.form.name:<3} jacobi={ok}  {nonzero}")

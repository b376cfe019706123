"""
Sign forms on Z2 x Z2
=====================

A sign form decides, for each pair of sectors, whether two operators
commute or anticommute. Only four are admissible in two bits.
"""

from parastat.grading import all_words, classify, koszul_sign, make_form, preset, LeibnizViolation

# %%
# The four presets, rows and columns ordered 00, 10, 01, 11.
for name in ("LA", "LS", "CLA", "CLS"):
    form = preset(name)
    print(name, classify(form).value)
    for row in form.rows():
        print("   ", *row)

# %%
# The sign entering a graded bracket is (-1)^<a,b>.
ls, cls = preset("LS"), preset("CLS")
print("LS  sign(10, 01) =", koszul_sign(ls, "10", "01"))
print("CLS sign(10, 01) =", koszul_sign(cls, "10", "01"))

# %%
# Additivity in each slot is enforced: flipping <10,01> alone breaks it.
words = all_words(2)
table = {(a, b): 0 for a in words for b in words}
table[words[1], words[2]] = table[words[2], words[1]] = 1
try:
    make_form(2, table)
except LeibnizViolation as exc:
    print("rejected:", exc)

# %%
# One bit is enough for an ordinary superalgebra.
odd = make_form(1, {("0", "0"): 0, ("0", "1"): 0, ("1", "0"): 0, ("1", "1"): 1})
print("n=1:", classify(odd).value)

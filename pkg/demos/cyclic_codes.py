"""Group codes from cyclic group algebra ideals.

For cyclic groups the ideal dimension has a classical cross-check: identify
F[C_n] with F[y]/(y^n - 1); then dim of the ideal of f equals n minus the
degree of gcd(f(y), y^n - 1).
"""

import numpy as np

from groupalg import (AlgebraElem, IdealSpec, build_code, code_to_text,
                      dim_ideal, encode, is_codeword, make_group,
                      min_distance, parse_field_spec)

field = parse_field_spec("gf:2")
group = make_group("cyclic:6")

# f = 1 + g^3 picks out the subgroup {1, g^3}; its ideal is a [6, 3] code
f = AlgebraElem(field, group, (1, 0, 0, 1, 0, 0))
spec = IdealSpec("left", (f,))
print("dim of the ideal of 1 + g^3:", dim_ideal(spec))

code = build_code(spec)
print(f"\n[{code.n},{code.k}] code, exported as:")
print(code_to_text(code).rstrip())

word = encode(code, [1, 0, 1])
print("\nencode [1,0,1] ->", word)
print("is a codeword:", is_codeword(code, word))
print("weight-1 word is not:", is_codeword(code, [1, 0, 0, 0, 0, 0]))

# brute-force minimum distance: every doubled coordinate pair gives weight 2
print("min distance:", min_distance(code))

# a denser generator: the all-ones element gives the repetition code
rep = build_code(IdealSpec("left", (AlgebraElem(field, group, np.ones(6, dtype=np.int64)),)))
print(f"\nall-ones generator: [{rep.n},{rep.k}] with d = {min_distance(rep)}")

"""What breaks when the characteristic divides the group order.

Over GF(2) and the Klein four-group the algebra is no longer semisimple:
characteristic polynomial bounds stop being tight, and some ideals have no
idempotent generator at all.  The annihilator is still easy to compute.
"""

from groupalg import (AlgebraElem, IdealSpec, annihilator_basis,
                      dim_bound_charpoly, dim_ideal, idempotent_generator,
                      make_group, parse_field_spec)

field = parse_field_spec("gf:2")
group = make_group("product:cyclic:2,cyclic:2")
print("group:", group.name, " labels:", " ".join(group.labels))

# f = 1 + (g,1): the 2x2 subgroup generator, squares to zero in char 2
f = AlgebraElem(field, group, (1, 1, 0, 0))
print("\nf =", f)
print("f*f =", f * f, " (nilpotent)")

b = dim_bound_charpoly(f)
print(f"charpoly = {b.charpoly.to_text()}  k = {b.k}")
print(f"bounds say dim in [{b.lower}, {b.upper}]",
      f"- actual dim = {dim_ideal(IdealSpec('left', (f,)))}")

# no element of the ideal is idempotent, so there is no idempotent generator
e = idempotent_generator(f, "left")
print("idempotent generator:", e)

# the annihilator of f is as large as the ideal is small
ann = annihilator_basis(f, "right")
print(f"\nright annihilator has dimension {len(ann)}:")
for v in ann:
    print("  ", v)
for v in ann:
    assert (f * v).is_zero

# contrast: over GF(5) the same support has an idempotent generator
field5 = parse_field_spec("gf:5")
f5 = AlgebraElem(field5, group, (1, 1, 0, 0))
print("\nover gf:5 instead:", idempotent_generator(f5, "left"))

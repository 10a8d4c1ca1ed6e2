"""
Structure-constant algebras and their validators
================================================

Algebras, coalgebras and Hopf algebras are given by structure-constant
tensors.  Validators re-expand every axiom over all basis tuples and
report the first offending tuple when something fails.
"""

from strongconn import (
    LinMap,
    StructureCoalgebra,
    check_grouplike,
    cyclic_group_hopf,
    sweedler_hopf,
    validate_coalgebra,
    validate_hopf,
)
from strongconn.linmaps import basis_vector
from strongconn.scalars import Field

QQ = Field.rationals()

# The group algebra of Z_4: grouplike basis, antipode g -> g^-1.
h = cyclic_group_hopf(4)
rep = validate_hopf(h)
print("kZ_4 checks:")
for c in rep.checks:
    print(f"  {c.status:>4}  {c.name}")

# Sweedler's four-dimensional Hopf algebra: the smallest Hopf algebra
# that is neither commutative nor cocommutative.  It validates fine;
# its role in this library is as the canonical NON-coseparable witness
# (see demo 04).
sw = sweedler_hopf()
print("\nSweedler H4 validates:", validate_hopf(sw).passed)

# Grouplikes are checked, never searched: the constructions only ever
# consume a designated grouplike, which an instance must supply.
g = basis_vector(QQ, h.space, 1)
x = basis_vector(QQ, sw.space, 2)
print("g in kZ_4 grouplike:", check_grouplike(g, h.coalgebra))
print("x in H4   grouplike:", check_grouplike(x, sw.coalgebra))

# Corrupt a coproduct and the validator pins the failure to a basis
# element.  Doubling the x (x) 1 term of comul(x) breaks
# coassociativity exactly at x (basis index 2).
entries = [list(r) for r in sw.coalgebra.comul.entries]
cc = sw.coalgebra.comul.codomain
entries[cc.flatten((2, 0))][2] = QQ.scalar(2)
broken = StructureCoalgebra(LinMap(QQ, sw.space, cc, entries),
                            sw.coalgebra.counit)
for c in validate_coalgebra(broken).checks:
    line = f"  {c.status:>4}  {c.name}"
    if c.witness:
        line += f"  witness {c.witness}"
    print(line)

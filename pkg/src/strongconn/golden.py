"""Assembly of the golden instance files, one per library builder.

The files double as format regression tests and as worked examples of
the instance format; `python -m strongconn.golden DIR` regenerates them.
"""

from __future__ import annotations

import os
import sys

from .extensions import EntwinedExtension
from .fileformat import InstanceFile, write_instance
from .instances import (
    build_graded_extension,
    build_group_self_extension,
    build_homogeneous_z4_z2,
    build_trivial,
    cyclic_group_hopf,
    self_extension,
    sweedler_hopf,
    truncated_polynomial_algebra,
)
from .scalars import Field
from .structures import HopfAlgebra


def instance_from_extension(name: str, ext: EntwinedExtension,
                            c_hopf: HopfAlgebra | None = None) -> InstanceFile:
    spaces = {"A": ext.algebra.dim, "C": ext.coalgebra.dim}
    tensors = {
        "mul": ext.algebra.mul,
        "unit": ext.algebra.unit,
        "comul": ext.coalgebra.comul,
        "counit": ext.coalgebra.counit,
        "psi": ext.entwining.psi,
        "rho": ext.coaction.rho,
    }
    designations = {k: k for k in tensors}
    if c_hopf is not None:
        tensors["c_mul"] = c_hopf.algebra.mul
        tensors["c_unit"] = c_hopf.algebra.unit
        tensors["c_antipode"] = c_hopf.antipode
        designations.update({"c_mul": "c_mul", "c_unit": "c_unit",
                             "c_antipode": "c_antipode"})
    return InstanceFile(name, ext.field, spaces, tensors, designations,
                        grouplike=ext.grouplike)


def _trivial_dim2() -> InstanceFile:
    ext = build_trivial(truncated_polynomial_algebra(2, 2))
    return instance_from_extension("trivial_dim2", ext)


def _group_self(n: int) -> InstanceFile:
    ext = build_group_self_extension(n)
    return instance_from_extension(f"group_self_z{n}", ext,
                                   c_hopf=cyclic_group_hopf(n))


def _graded(n: int, t, field: Field | None = None, suffix: str = "") -> InstanceFile:
    field = field or Field.rationals()
    ext = build_graded_extension(n, t, field)
    return instance_from_extension(f"graded_n{n}_t{t}{suffix}", ext,
                                   c_hopf=cyclic_group_hopf(n, field))


def _sweedler() -> InstanceFile:
    hopf = sweedler_hopf()
    ext = self_extension(hopf)
    return instance_from_extension("sweedler_h4", ext, c_hopf=hopf)


def _homogeneous_z4_z2() -> InstanceFile:
    datum = build_homogeneous_z4_z2()
    hopf = datum.hopf
    tensors = {
        "mul": hopf.algebra.mul,
        "unit": hopf.algebra.unit,
        "a_comul": hopf.coalgebra.comul,
        "a_counit": hopf.coalgebra.counit,
        "a_antipode": hopf.antipode,
    }
    return InstanceFile("homogeneous_z4_z2", hopf.field,
                        {"A": hopf.dim}, tensors,
                        {k: k for k in tensors},
                        b_subspace=datum.b_subalgebra)


GOLDEN_BUILDERS = {
    "trivial_dim2": _trivial_dim2,
    "group_self_z2": lambda: _group_self(2),
    "group_self_z4": lambda: _group_self(4),
    "graded_n2_t2": lambda: _graded(2, 2),
    "graded_n3_t1_cyclotomic": lambda: _graded(
        3, 1, Field.number_field([1, 1, 1]), suffix="_cyclotomic"),
    "sweedler_h4": _sweedler,
    "homogeneous_z4_z2": _homogeneous_z4_z2,
}


def build_golden(name: str) -> InstanceFile:
    return GOLDEN_BUILDERS[name]()


def write_golden_files(directory: str) -> list[str]:
    os.makedirs(directory, exist_ok=True)
    written = []
    for name in sorted(GOLDEN_BUILDERS):
        inst = build_golden(name)
        path = os.path.join(directory, f"{name}.json")
        write_instance(inst, path)
        written.append(path)
    return written


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    directory = argv[0] if argv else "golden"
    for path in write_golden_files(directory):
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())

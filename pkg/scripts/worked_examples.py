"""Print the small hand-checkable examples: Smith forms, reductions, realizations,
fraction systems and structure at infinity."""

from rosenbrock_edd import (QZ, RPR, ZZ, Frac, Matrix, diagnose_reducible, fof_assemble,
                            fof_forward, infinity_structure, minimal_realization,
                            reduce_system, smith, verify_rosenbrock)
from rosenbrock_edd.matrices import det
from rosenbrock_edd.parse import format_value
from rosenbrock_edd.poly import Poly, ProperRat
from rosenbrock_edd.system import SystemMatrix


def fmt(v):
    if isinstance(v, (tuple, list)):
        return "(" + ", ".join(fmt(x) for x in v) + ")"
    if isinstance(v, Matrix):
        return "[" + "; ".join(", ".join(format_value(x) for x in r) for r in v.rows) + "]"
    if isinstance(v, (bool, str)):
        return str(v)
    return format_value(v)


def show(title, value):
    print(f"{title:<40} {fmt(value)}")


def reducible_six():
    # transfer function 3/2, with extra factors 2 and 5 hidden in A
    M = Matrix(ZZ, [[-2, 0, 0, 1, 0, 0],
                    [0, 2, 0, 0, 1, 0],
                    [0, 0, 5, 0, 0, 0],
                    [3, 0, 0, 0, 0, 0],
                    [0, 0, 0, 0, 0, 0],
                    [0, 0, 1, 0, 0, 0]])
    return SystemMatrix.from_matrix(M, 3)


def shared_factor(p):
    return SystemMatrix.from_matrix(Matrix(ZZ, [[p, 0, p, 0], [0, 1, 0, 1], [p, 1, 0, 0]]), 2)


def main():
    P = reducible_six()
    rep = verify_rosenbrock(P)
    print("reducible 6x6 system over Z")
    show("  Smith(P)", rep.computed_SP)
    show("  predicted from SM(G)", rep.predicted_SP)
    show("  Smith(A) vs predicted", (rep.computed_SA, rep.predicted_SA))
    d = diagnose_reducible(P)
    show("  psi-tilde", d.psi_tilde)
    for k in ("i", "ii", "iii", "iv"):
        show(f"  item {k}", d[k].holds)

    print("\ncommon factor p in A, B and C")
    for p, factor in ((2, None), (6, 2)):
        res = reduce_system(shared_factor(p), left_factor=factor)
        show(f"  p={p} det E, det F", (det(res.E), det(res.F)))

    print("\nminimal realization of diag(1/6, 4)")
    G = Matrix(ZZ.field, [[Frac(1, 6), 0], [0, 4]])
    real = minimal_realization(G)
    s = real.system
    show("  dimension", real.n)
    show("  A, B, C, D", (s.A, s.B, s.C, s.D))
    show("  transfer reproduces G", s.transfer() == G)

    print("\nfraction system over proper rational functions")
    F = RPR.field
    z = Frac(1, ProperRat.inv_z(1), ring=RPR)
    sys = fof_assemble(Matrix(F, [[z]]), Matrix(F, [[1]]), Matrix(F, [[1]]), Matrix(F, [[0]]))
    f = fof_forward(sys)
    show("  alpha, beta, gamma", (sys.alpha, sys.beta, sys.gamma))
    show("  SM(A) predicted / computed", (f.predicted_SA, f.computed_SA))
    show("  SM(P) predicted / computed", (f.predicted_SP, f.computed_SP))

    print("\nstructure at infinity")
    zp = Poly.z()
    for T in (Matrix(QZ, [[zp, 0], [0, 1]]), Matrix(QZ, [[zp ** 2]]),
              Matrix(QZ, [[zp, 1], [0, zp]])):
        inf = infinity_structure(T)
        show(f"  {fmt(T)}", (inf.orders, "agree" if inf.agree else "DISAGREE"))


if __name__ == "__main__":
    main()

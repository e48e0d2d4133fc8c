"""Module computations: syzygies, periodicity and symmetrizing forms.

Run: python demos/03_modules_and_symmetry.py
"""

from quiverforge import algebras as alg
from quiverforge import modcat
from quiverforge.triquiver import make_data, standard


def fd_from_ideal(I):
    return modcat.FDAlgebra(alg.fd_algebra_from_ideal(I))


print("K[x]/(x^5): syzygies of the cyclic modules x^i K[x]/(x^5)")
A = fd_from_ideal(alg.printed_ideal(alg.bga2cy("loop", 4), 8))
P = modcat.projective(A, 0)
for i in range(1, 5):
    k = A.basis.index((0, (0,) * i))
    M = modcat.submodule(P, [[int(j == k) for j in range(A.n)]])[0]
    O = modcat.syzygy(A, M)
    print("  dim M = %d, dim Omega M = %d, Omega-period %s"
          % (M.dim, O.dim, modcat.omega_period(A, M, 4)))

print("\nSimple modules over triangulation algebras have Omega-period 4")
for name, m in (("1", 2), ("2", {"alpha": 4, "beta": 1}), ("3b", 2)):
    tq = standard(name)
    spec = alg.verify_finite_dimensional(alg.triangulation_presentation(tq, make_data(tq, m)))
    B = modcat.FDAlgebra(spec)
    periods = [modcat.omega_period(B, S, 6) for S in modcat.simples(B)]
    orbit = modcat.omega_orbit_dims(B, modcat.simples(B)[0], 4)
    print("  quiver %-3s dim %3d periods %s, dimension vectors of Omega^r S_0: %s"
          % (name, B.n, periods, orbit))

    form = modcat.symmetrizing_form(B)
    print("           symmetrizing form found and checked: %s"
          % (form is not None and modcat.check_symmetrizing(B, form)))

print("\nBrauer star algebras: simples have period 2n")
for n, m in ((2, 1), (3, 1)):
    B = fd_from_ideal(alg.printed_ideal(alg.brauer_star(n, m), n * m + 4))
    print("  n = %d, m = %d: periods %s" % (n, m, [modcat.omega_period(B, S, 8)
                                                 for S in modcat.simples(B)]))

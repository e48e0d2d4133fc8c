"""Triangulation algebras: presentations, certified dimensions, Cartan matrices,
the degeneration to a Brauer graph algebra, and the named families.

Run: python demos/02_triangulation_algebras.py
"""

from quiverforge import algebras as alg
from quiverforge.pathalg import TruncatedIdeal
from quiverforge.triquiver import make_data, standard

print("Quiver 2 (punctured monogon) with m = (4, 1)")
tq = standard("2")
data = make_data(tq, {"alpha": 4, "beta": 1})
p = alg.triangulation_presentation(tq, data)
for rel in alg.relations_text(p.generators):
    print("  ", rel, "= 0")

spec = alg.verify_finite_dimensional(p)
print("dimension", spec.dimension, "checks", spec.checks)
C = alg.tri_cartan(p)
print("Cartan", C.matrix, "det", C.det, "entry sum", sum(map(sum, C.matrix)))

print("\nOne-vertex algebra for m = 2, 3, 4: dimension 4m")
for m in (2, 3, 4):
    q1 = standard("1")
    I = alg.triangulation_ideal(alg.triangulation_presentation(q1, make_data(q1, m)))
    print("  m = %d: dimension %d" % (m, I.dimension()))

print("\nDegeneration family on quiver 3b with m = 2")
tq = standard("3b")
data = make_data(tq, 2)
p = alg.triangulation_presentation(tq, data)
N = alg.default_truncation(tq, data) + 2
big, e, e1 = alg.degeneration_exponents(tq, data)
print("  N = %d, exponents N e_a: %s" % (big, sorted({int(x) for x in e.values()})))
for t in (0, 1, 2):
    rels = [r.truncate(N) for r in alg.degeneration_family(p, t)]
    I = TruncatedIdeal(tq.quiver, rels, N)
    print("  t = %d: dimension %d" % (t, I.dimension()))
print("  Brauer graph algebra dimension", alg.bga_dimension(alg.brauer_presentation(tq, data)))

print("\nMarkov quiver with W = sum of triangles - omega^k")
for k in (1, 2, 3):
    W = alg.nondegenerate_family_W(standard("3''"), [0] * k + [1], 12 * k + 3)
    print("  k = %d: Jacobian algebra dimension %d" % (k, alg.jacobian_ideal(W).dimension()))

print("\nNamed families, printed relations versus triangulation data")
for inst in (alg.q2b(2, 3, 8, 1), alg.q3k(2, 3, 4)):
    pres = inst.presentation()
    I = alg.printed_ideal(inst, alg.default_truncation(pres.tq, pres.data) + 4)
    print("  %-22s printed dim %3d, from data %3d, Cartan %s"
          % (inst.name, I.dimension(), alg.data_dimension(pres.tq, pres.data),
             alg.cartan_of_ideal(I).matrix))
new = alg.printed_ideal(alg.q3a(3), 20)
print("  %-22s printed dim %3d, Cartan %s" % ("Q(3A)_3^3", new.dimension(),
                                             alg.cartan_of_ideal(new).matrix))

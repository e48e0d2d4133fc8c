"""Triangulation quivers, the surfaces they come from, and flips.

Run: python demos/01_quivers_and_surfaces.py
"""

from quiverforge import surface
from quiverforge.ribbon import are_isomorphic
from quiverforge.triquiver import enumerate_triangulation_quivers, is_self_dual, mutate


def describe(surf):
    return "genus %d, boundary %s, %d punctures" % (surf.genus, list(surf.boundary), surf.punctures)


print("Connected triangulation quivers up to isomorphism, and their surfaces")
for n in range(1, 5):
    qs = enumerate_triangulation_quivers(n)
    print("\n%d vertices: %d quivers" % (n, len(qs)))
    for tq in qs:
        surf = surface.recover_surface(tq)
        flag = "  self-dual" if is_self_dual(tq) else ""
        print("  f-cycles %-12s g-cycles %-12s %s%s"
              % (tq.f.cycle_type(), tq.g.cycle_type(), describe(surf), flag))

print("\nFlipping an arc of the once-punctured torus matches mutation of its quiver:")
t = surface.once_punctured_torus()
q = surface.quiver_from_triangulation(t)
for arc in range(len(t.glue)):
    flipped = surface.quiver_from_triangulation(surface.flip(t, arc))
    same = are_isomorphic(flipped, mutate(q, arc)[0]) is not None
    print("  arc %d: flip == mutation? %s" % (arc, same))

print("\nThe self-folded arc of the punctured monogon cannot be flipped:")
try:
    surface.flip(surface.punctured_monogon(), 0)
except Exception as e:
    print("  %s: %s" % (type(e).__name__, e))

print("\nDimer model of the Markov quiver (once-punctured torus):")
d = surface.to_dimer(surface.quiver_from_triangulation(t))
print("  white nodes: %d, black nodes: %d, quadrilateral faces: %d, genus %d"
      % (len(d.white_nodes), len(d.black_nodes), len(d.faces()), d.genus()))

"""Command-line front end.  Every command prints JSON on stdout; errors print
one JSON line on stderr and exit with a code specific to the failure class."""

import argparse
import json
import os
import random
import sys

from . import algebras as alg
from . import modcat, surface
from .errors import QuiverforgeError
from .field import GF, QQ
from .ribbon import ribbon_from_json, ribbon_to_dot, ribbon_to_json
from .triquiver import (
    block_decompose, data_from_json, data_to_json, enumerate_triangulation_quivers,
    g_cycle_count_bound, is_self_dual, is_triangulation, mutate, standard,
)

EXIT_USAGE = 2
EXIT_IO = 3
EXIT_FORMAT = 4
EXIT_VERIFY_FAILED = 1


class CliError(Exception):
    def __init__(self, kind, message, code):
        super().__init__(message)
        self.kind = kind
        self.code = code


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError("UsageError", message, EXIT_USAGE)


def _read_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as e:
        raise CliError("FileError", "%s: %s" % (path, e.strerror), EXIT_IO)
    except json.JSONDecodeError as e:
        raise CliError("FormatError", "%s: invalid JSON (%s)" % (path, e), EXIT_FORMAT)


def load_quiver(spec):
    """A JSON file, or ``std:NAME`` for a standard quiver."""
    if spec.startswith("std:"):
        try:
            return standard(spec[4:])
        except KeyError as e:
            raise CliError("UsageError", str(e.args[0]), EXIT_USAGE)
    d = _read_json(spec)
    try:
        return ribbon_from_json(d)
    except (KeyError, TypeError, ValueError) as e:
        raise CliError("FormatError", "%s: malformed quiver (%s)" % (spec, e), EXIT_FORMAT)


def load_data(rq, path):
    d = _read_json(path)
    try:
        return data_from_json(rq, d)
    except (KeyError, TypeError, ValueError) as e:
        raise CliError("FormatError", "%s: malformed data (%s)" % (path, e), EXIT_FORMAT)


def _field(args):
    return GF(args.char) if getattr(args, "char", 0) else QQ


def _truncation(args, default):
    if getattr(args, "truncation", None):
        return args.truncation
    env = os.environ.get("QUIVERFORGE_TRUNCATION")
    if env:
        try:
            return int(env)
        except ValueError:
            raise CliError("UsageError", "QUIVERFORGE_TRUNCATION must be an integer", EXIT_USAGE)
    return default


# ---------------------------------------------------------------------------
# commands

def cmd_enumerate(args):
    qs = enumerate_triangulation_quivers(args.vertices)
    return {"vertices": args.vertices, "count": len(qs),
            "quivers": [ribbon_to_json(q) for q in qs]}


def cmd_analyze(args):
    rq = load_quiver(args.file)
    q = rq.quiver
    loops = [q.name(a) for a in range(q.n_arrows) if q.is_loop(a)]
    two = []
    for a in range(q.n_arrows):
        for b in range(a + 1, q.n_arrows):
            if not q.is_loop(a) and q.source[a] == q.target[b] and q.target[a] == q.source[b]:
                two.append([q.name(a), q.name(b)])
    out = {
        "vertices": rq.n_vertices, "arrows": rq.n_arrows,
        "f_cycle_type": list(rq.f.cycle_type()), "g_cycle_type": list(rq.g.cycle_type()),
        "loops": loops, "two_cycles": two, "connected": rq.is_connected(),
        "self_dual": is_self_dual(rq), "triangulation": is_triangulation(rq),
    }
    if is_triangulation(rq):
        bd = block_decompose(rq)
        kinds = {}
        for b in bd.blocks:
            kinds[b.kind] = kinds.get(b.kind, 0) + 1
        out["blocks"] = {k: kinds.get(k, 0) for k in "ABC"}
        if rq.is_connected():
            bound, eq = g_cycle_count_bound(rq)
            out["g_cycle_bound"] = {"bound": bound, "attained": eq}
        try:
            out["surface"] = surface.recover_surface(rq).to_json()
        except QuiverforgeError as e:
            out["surface"] = {"error": type(e).__name__, "message": str(e)}
    return out


def cmd_mutate(args):
    rq = load_quiver(args.file)
    data = load_data(rq, args.data) if args.data else None
    new, nd = mutate(rq, args.vertex, data)
    out = {"quiver": ribbon_to_json(new)}
    if nd is not None:
        out["data"] = data_to_json(new, nd)
    return out


STANDARD_TRIANGULATIONS = {
    "square": surface.square, "punctured_monogon": surface.punctured_monogon,
    "unpunctured_monogon": surface.unpunctured_monogon, "triangle": surface.triangle,
    "once_punctured_torus": surface.once_punctured_torus,
    "thrice_punctured_sphere": surface.thrice_punctured_sphere,
    "tetrahedron": surface.tetrahedron_sphere,
}


def load_triangulation(spec):
    """A JSON file, or ``std:NAME`` for a standard triangulation."""
    if spec.startswith("std:"):
        name = spec[4:]
        if name not in STANDARD_TRIANGULATIONS:
            raise CliError("UsageError", "unknown standard triangulation %r; known: %s"
                           % (name, sorted(STANDARD_TRIANGULATIONS)), EXIT_USAGE)
        return STANDARD_TRIANGULATIONS[name]()
    d = _read_json(spec)
    try:
        return surface.CombinatorialTriangulation.from_json(d)
    except (KeyError, TypeError) as e:
        raise CliError("FormatError", "malformed triangulation (%s)" % e, EXIT_FORMAT)


def cmd_flip(args):
    t = load_triangulation(args.file)
    t2 = surface.flip(t, args.arc)
    return {"triangulation": t2.to_json(),
            "quiver": ribbon_to_json(surface.quiver_from_triangulation(t2)),
            "surface": surface.surface_of_triangulation(t2).to_json()}


def cmd_present(args):
    rq = load_quiver(args.file)
    data = load_data(rq, args.data)
    field = _field(args)
    if args.kind == "brauer":
        p = alg.brauer_presentation(rq, data, field)
        return {"kind": "brauer", "zero_relations": alg.relations_text(p.zero_relations),
                "commutativity_relations": alg.relations_text(p.comm_relations)}
    p = alg.triangulation_presentation(rq, data, field)
    out = {"kind": "triangulation", "admissible": p.admissible, "exceptional": p.exceptional,
           "relations": alg.relations_text(p.generators)}
    if args.extended:
        out["extended"] = alg.relations_text(p.extended)
    if p.notes:
        out["notes"] = list(p.notes)
    return out


def cmd_cartan(args):
    rq = load_quiver(args.file)
    data = load_data(rq, args.data)
    return alg.cartan_from_data(rq, data).to_json()


def cmd_verify(args):
    rq = load_quiver(args.file)
    data = load_data(rq, args.data)
    field = _field(args)
    rng = random.Random(args.seed)
    p = alg.triangulation_presentation(rq, data, field)
    N = _truncation(args, alg.default_truncation(p.tq, data))
    spec = alg.verify_finite_dimensional(p, N)
    A = modcat.FDAlgebra(spec)
    checks = dict(spec.checks)
    cartan = alg.tri_cartan(p)
    checks["cartan_cross_check"] = modcat.cartan_cross_check(A, cartan)
    form = modcat.symmetrizing_form(A, rng)
    checks["symmetrizing_form"] = form is not None and modcat.check_symmetrizing(A, form)
    periods, orbits = [], []
    for S in modcat.simples(A):
        r = modcat.omega_period(A, S, 4, rng)
        periods.append(r)
        orbits.append([list(x) for x in modcat.omega_orbit_dims(A, S, 4)])
    checks["omega4_simples"] = all(r is not None and 4 % r == 0 for r in periods)
    failed = sorted(k for k, v in checks.items() if not v)
    out = {"dimension": spec.dimension, "truncation": N,
           "basis": spec.to_json()["basis"], "cartan": cartan.to_json(),
           "simple_periods": periods, "omega_orbits": orbits,
           "checks": checks, "failed": failed, "ok": not failed}
    if p.notes:
        out["notes"] = list(p.notes)
    return out


def cmd_family(args):
    params = []
    for x in args.params:
        try:
            params.append(int(x))
        except ValueError:
            params.append(x)
    try:
        inst = alg.family_constructor(args.name, *params)
    except TypeError as e:
        raise CliError("UsageError", "bad parameters for %s: %s" % (args.name, e), EXIT_USAGE)
    out = {"name": inst.name, "quiver": {
        "vertices": inst.quiver.n_vertices,
        "arrows": [{"id": a, "name": inst.quiver.name(a), "s": inst.quiver.source[a],
                    "t": inst.quiver.target[a]} for a in range(inst.quiver.n_arrows)]},
        "relations": alg.relations_text(inst.relations)}
    if inst.data is not None:
        out["triangulation_quiver"] = ribbon_to_json(inst.tq)
        out["data"] = data_to_json(inst.tq, inst.data)
        out["cartan"] = alg.cartan_from_data(inst.tq, inst.data).to_json()
    if inst.notes:
        out["notes"] = list(inst.notes)
    if args.dimension and inst.relations:
        N = _truncation(args, 4 * sum(1 for _ in inst.relations) + 12)
        I = alg.printed_ideal(inst, N)
        out["printed"] = {"truncation": N, "stabilized": I.stabilized(),
                          "dimension": I.dimension() if I.stabilized() else None}
        if I.stabilized():
            out["printed"]["cartan"] = alg.cartan_of_ideal(I).to_json()
    return out


def cmd_export(args):
    rq = load_quiver(args.file)
    if args.format == "dot":
        return ribbon_to_dot(rq)
    return ribbon_to_json(rq)


# ---------------------------------------------------------------------------

def build_parser():
    p = _Parser(prog="quiverforge", description="Triangulation quivers and their algebras.")
    p.add_argument("--pretty", action="store_true", help="indented JSON output")
    common = _Parser(add_help=False)
    common.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    _add = sub.add_parser

    def add_parser(name, **kw):
        return _add(name, parents=[common], **kw)

    sub.add_parser = add_parser

    s = sub.add_parser("enumerate", help="list triangulation quivers")
    s.add_argument("--vertices", type=int, required=True)

    s = sub.add_parser("analyze", help="cycle types, blocks, surface")
    s.add_argument("file")

    s = sub.add_parser("mutate", help="mutate at a vertex")
    s.add_argument("file")
    s.add_argument("--vertex", type=int, required=True)
    s.add_argument("--data")

    s = sub.add_parser("flip", help="flip an arc of a triangulation")
    s.add_argument("file")
    s.add_argument("--arc", type=int, required=True)

    s = sub.add_parser("present", help="emit relations")
    s.add_argument("file")
    s.add_argument("--data", required=True)
    s.add_argument("--kind", choices=["brauer", "triangulation"], required=True)
    s.add_argument("--extended", action="store_true")
    s.add_argument("--char", type=int, default=0)

    s = sub.add_parser("cartan", help="Cartan matrix from multiplicities")
    s.add_argument("file")
    s.add_argument("--data", required=True)

    s = sub.add_parser("verify", help="certify a triangulation algebra")
    s.add_argument("file")
    s.add_argument("--data", required=True)
    s.add_argument("--truncation", type=int)
    s.add_argument("--char", type=int, default=0)
    s.add_argument("--seed", type=int, default=0)

    s = sub.add_parser("family", help="named families")
    s.add_argument("name", choices=sorted(alg.FAMILIES))
    s.add_argument("--params", nargs="*", default=[])
    s.add_argument("--dimension", action="store_true",
                   help="also compute the dimension from the printed relations")
    s.add_argument("--truncation", type=int)

    s = sub.add_parser("export", help="export a quiver")
    s.add_argument("file")
    s.add_argument("--format", choices=["dot", "json"], default="json")
    return p


COMMANDS = {
    "enumerate": cmd_enumerate, "analyze": cmd_analyze, "mutate": cmd_mutate,
    "flip": cmd_flip, "present": cmd_present, "cartan": cmd_cartan, "verify": cmd_verify,
    "family": cmd_family, "export": cmd_export,
}


def _fail(kind, message, code):
    sys.stderr.write(json.dumps({"error": kind, "message": message, "exit_code": code}) + "\n")
    return code


def run(argv=None):
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "char", 0):
            try:
                GF(args.char)
            except ValueError as e:
                raise CliError("UsageError", str(e), EXIT_USAGE)
        out = COMMANDS[args.command](args)
    except CliError as e:
        return _fail(e.kind, str(e), e.code)
    except QuiverforgeError as e:
        return _fail(type(e).__name__, str(e), e.exit_code)
    if isinstance(out, str):
        sys.stdout.write(out if out.endswith("\n") else out + "\n")
        return 0
    text = json.dumps(out, indent=2 if args.pretty else None, sort_keys=True)
    sys.stdout.write(text + "\n")
    if args.command == "verify" and not out["ok"]:
        return EXIT_VERIFY_FAILED
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

"""Truncated complete path algebras, potentials and ideal membership.

A path is a pair ``(start, arrows)`` with ``arrows`` a tuple of arrow ids
composed left to right (``t(a_i) == s(a_{i+1})``); the trivial path at ``v``
is ``(v, ())``.  Elements store a sparse map path -> scalar and carry a
truncation degree ``N``: paths longer than ``N`` are dropped, which is exact
arithmetic in ``KQ / A^(N+1)`` where ``A`` is the arrow ideal.

Ideal membership works in that truncated algebra.  ``TruncatedIdeal`` builds a
rewriting basis whose leading word of each rule is its *shortest* term, so
rewriting only ever raises degree and terminates at ``N``.  When the normal
words die out below ``N`` the ideal contains ``A^N`` and all answers hold in the
complete path algebra modulo the closed ideal.
"""

import heapq
import re
import threading
from fractions import Fraction

from .errors import (
    ComputationTooLarge, DegreeTooHigh, InvarianceViolation, NotInvertible,
    ParallelClassViolation, ParseError, QuiverMismatch,
)
from .field import QQ
from .linalg import Echelon, inverse


def path_target(q, p):
    start, arrows = p
    return q.target[arrows[-1]] if arrows else start


def path_vertices(q, p):
    start, arrows = p
    return [start] + [q.target[a] for a in arrows]


def concat(q, p1, p2):
    """Concatenation p1 then p2, or None when not composable."""
    if path_target(q, p1) != p2[0]:
        return None
    return (p1[0], p1[1] + p2[1])


def path_key(p):
    return (len(p[1]), p[1], p[0])


def paths_up_to(q, n, start=None):
    """All paths of length <= n (optionally from one vertex), shortest first."""
    layer = [(v, ()) for v in range(q.n_vertices) if start is None or v == start]
    out = list(layer)
    for _ in range(n):
        layer = [(s, arr + (a,)) for s, arr in layer for a in q.arrows_from(path_target(q, (s, arr)))]
        out.extend(layer)
    return out


class TruncatedElement:
    """Linear combination of paths of length <= N (N None: no truncation)."""

    __slots__ = ("quiver", "N", "terms", "field")

    def __init__(self, quiver, N, terms=None, field=QQ):
        self.quiver = quiver
        self.N = N
        self.field = field
        clean = {}
        for p, c in (terms or {}).items():
            if N is not None and len(p[1]) > N:
                continue
            c = field(c)
            if c:
                clean[p] = clean.get(p, field.zero) + c
                if not clean[p]:
                    del clean[p]
        self.terms = clean

    # constructors
    @classmethod
    def zero(cls, q, N, field=QQ):
        return cls(q, N, {}, field)

    @classmethod
    def path(cls, q, p, N, field=QQ, coef=1):
        return cls(q, N, {p: coef}, field)

    @classmethod
    def arrow(cls, q, a, N, field=QQ):
        return cls(q, N, {(q.source[a], (a,)): 1}, field)

    @classmethod
    def unit(cls, q, i, N, field=QQ):
        return cls(q, N, {(i, ()): 1}, field)

    @classmethod
    def one(cls, q, N, field=QQ):
        return cls(q, N, {(i, ()): 1 for i in range(q.n_vertices)}, field)

    def _check(self, other):
        if not isinstance(other, TruncatedElement):
            raise TypeError("expected a TruncatedElement")
        if other.quiver != self.quiver or other.N != self.N or other.field != self.field:
            raise QuiverMismatch("operands live in different truncated path algebras")

    def _new(self, terms):
        out = TruncatedElement.__new__(TruncatedElement)
        out.quiver, out.N, out.field = self.quiver, self.N, self.field
        out.terms = {p: c for p, c in terms.items() if c}
        return out

    def __add__(self, other):
        self._check(other)
        t = dict(self.terms)
        for p, c in other.terms.items():
            t[p] = t.get(p, self.field.zero) + c
        return self._new(t)

    def __neg__(self):
        return self._new({p: -c for p, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = self.field(c)
        return self._new({p: c * x for p, x in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, TruncatedElement):
            return self.scale(other)
        self._check(other)
        q, N, zero = self.quiver, self.N, self.field.zero
        by_start = {}
        for p, c in other.terms.items():
            by_start.setdefault(p[0], []).append((p, c))
        t = {}
        for p1, c1 in self.terms.items():
            end = path_target(q, p1)
            for p2, c2 in by_start.get(end, ()):
                if N is not None and len(p1[1]) + len(p2[1]) > N:
                    continue
                p = (p1[0], p1[1] + p2[1])
                t[p] = t.get(p, zero) + c1 * c2
        return self._new(t)

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        return (isinstance(other, TruncatedElement) and self.quiver == other.quiver
                and self.terms == other.terms)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def coefficient(self, p):
        return self.terms.get(p, self.field.zero)

    def degree(self):
        return max((len(p[1]) for p in self.terms), default=-1)

    def low_degree(self):
        return min((len(p[1]) for p in self.terms), default=None)

    def homogeneous(self, d):
        return self._new({p: c for p, c in self.terms.items() if len(p[1]) == d})

    def truncate(self, N):
        return TruncatedElement(self.quiver, N, self.terms, self.field)

    def with_N(self, N):
        return self.truncate(N)

    def components(self):
        """Split into e_i x e_j pieces."""
        out = {}
        for p, c in self.terms.items():
            out.setdefault((p[0], path_target(self.quiver, p)), {})[p] = c
        return {k: self._new(v) for k, v in out.items()}

    def leading(self):
        """Shortest term (ties broken by arrow ids then start vertex)."""
        return min(self.terms, key=path_key) if self.terms else None

    def __repr__(self):
        return format_element(self)


def mul(a, b):
    return a * b


def add(a, b):
    return a + b


def scale(a, c):
    return a.scale(c)


def unit(q, i, N, field=QQ):
    return TruncatedElement.unit(q, i, N, field)


def power(x, k):
    out = TruncatedElement.one(x.quiver, x.N, x.field)
    for _ in range(k):
        out = out * x
    return out


# ---------------------------------------------------------------------------
# text format:  c1 * a.b.c + c2 * e_3

def format_path(q, p):
    if not p[1]:
        return "e_%d" % p[0]
    return ".".join(q.name(a) for a in p[1])


def format_element(x):
    if not x.terms:
        return "0"
    parts = []
    for p in sorted(x.terms, key=path_key):
        c = x.coefficient(p)
        neg = (isinstance(c, Fraction) and c < 0)
        mag = -c if neg else c
        body = format_path(x.quiver, p)
        txt = body if mag == 1 else "%s * %s" % (mag, body)
        if not parts:
            parts.append(("-" if neg else "") + txt)
        else:
            parts.append(("- " if neg else "+ ") + txt)
    return " ".join(parts)


_TERM = re.compile(r"\s*([+-])?\s*(?:(\d+(?:/\d+)?)\s*\*?\s*)?([A-Za-z_][\w.']*)?\s*")


def parse_path(q, text):
    text = text.strip()
    m = re.fullmatch(r"e_(\d+)", text)
    if m:
        v = int(m.group(1))
        if not 0 <= v < q.n_vertices:
            raise ParseError("no vertex %d" % v)
        return (v, ())
    arrows = []
    for name in text.split("."):
        try:
            arrows.append(q.arrow_by_name(name))
        except (KeyError, ValueError):
            raise ParseError("unknown arrow %r" % name)
    for a, b in zip(arrows, arrows[1:]):
        if q.target[a] != q.source[b]:
            raise ParseError("arrows %s and %s do not compose" % (q.name(a), q.name(b)))
    return (q.source[arrows[0]], tuple(arrows))


def parse_element(q, text, N=None, field=QQ):
    """Parse ``c1 * a.b.c + c2 * e_3`` (arrow names joined by dots)."""
    text = text.strip()
    if not text:
        raise ParseError("empty element")
    if text == "0":
        return TruncatedElement(q, N, {}, field)
    pos, terms, first = 0, {}, True
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError("cannot parse near %r" % text[pos:])
        sign, coef, body = m.groups()
        if sign is None and not first:
            raise ParseError("missing operator near %r" % text[pos:])
        if body is None:
            raise ParseError("term without a path near %r" % text[pos:])
        c = field(Fraction(coef) if coef else 1)
        if sign == "-":
            c = -c
        p = parse_path(q, body)
        terms[p] = terms.get(p, field.zero) + c
        pos, first = m.end(), False
    return TruncatedElement(q, N, terms, field)


# ---------------------------------------------------------------------------
# potentials

def _rotation_min(arrows):
    n = len(arrows)
    return min(arrows[i:] + arrows[:i] for i in range(n))


class Potential:
    """Cycles up to rotation, keyed by their rotation-minimal arrow word."""

    def __init__(self, quiver, N, terms=None, field=QQ):
        self.quiver, self.N, self.field = quiver, N, field
        t = {}
        for word, c in (terms or {}).items():
            word = tuple(word)
            if not word or (N is not None and len(word) > N):
                continue
            if quiver.target[word[-1]] != quiver.source[word[0]] or any(
                    quiver.target[a] != quiver.source[b] for a, b in zip(word, word[1:])):
                raise ValueError("not a cycle: %r" % (word,))
            key = _rotation_min(word)
            t[key] = t.get(key, field.zero) + field(c)
        self.terms = {k: c for k, c in t.items() if c}

    @classmethod
    def from_element(cls, x):
        """Keep the cyclic part of an element."""
        terms = {}
        for p, c in x.terms.items():
            if p[1] and path_target(x.quiver, p) == p[0]:
                terms[p[1]] = terms.get(p[1], x.field.zero) + c
        return cls(x.quiver, x.N, terms, x.field)

    def __add__(self, other):
        t = dict(self.terms)
        for k, c in other.terms.items():
            t[k] = t.get(k, self.field.zero) + c
        return Potential(self.quiver, self.N, t, self.field)

    def scale(self, c):
        return Potential(self.quiver, self.N, {k: self.field(c) * x for k, x in self.terms.items()},
                         self.field)

    def __eq__(self, other):
        return isinstance(other, Potential) and self.terms == other.terms

    def __repr__(self):
        q = self.quiver
        return " + ".join("%s*%s" % (c, ".".join(q.name(a) for a in k))
                          for k, c in sorted(self.terms.items())) or "0"


def cyclic_derivative(W, a):
    """Sum over occurrences of ``a``: the rest of the cycle read from after ``a``."""
    q, terms = W.quiver, {}
    for word, c in W.terms.items():
        for i, b in enumerate(word):
            if b != a:
                continue
            rest = word[i + 1:] + word[:i]
            p = (q.target[a], rest)
            terms[p] = terms.get(p, W.field.zero) + c
    return TruncatedElement(q, W.N, terms, W.field)


def jacobian_generators(W):
    return [cyclic_derivative(W, a) for a in range(W.quiver.n_arrows)]


# ---------------------------------------------------------------------------
# hyperpotentials

def check_parallel_class(q, rho):
    for a, x in rho.items():
        for p in x.terms:
            if p[0] != q.target[a] or path_target(q, p) != q.source[a]:
                raise ParallelClassViolation(
                    "rho[%s] has a term not running from t(%s) to s(%s)" % (q.name(a), q.name(a), q.name(a)))


def verify_hyperpotential(q, rho, N=None, field=QQ):
    """Check that sum_a a*rho_a equals sum_a rho_a*a up to degree N."""
    check_parallel_class(q, rho)
    if N is None:
        N = max((x.N for x in rho.values() if x.N is not None), default=None)
    total = TruncatedElement.zero(q, N, field)
    for a in range(q.n_arrows):
        x = rho.get(a)
        if x is None:
            continue
        x = x.truncate(N)
        arr = TruncatedElement.arrow(q, a, N, field)
        total = total + arr * x - x * arr
    return total.is_zero()


def _cycle_path(perm, a, length):
    out, b = [], a
    for _ in range(length):
        out.append(b)
        b = perm(b)
    return tuple(out)


def _poly_eval(coeffs, base, start, q, N, field):
    """sum_k coeffs[k] * base^k with base^0 = e_start."""
    out = TruncatedElement.zero(q, N, field)
    pw = TruncatedElement.unit(q, start, N, field)
    for k, c in enumerate(coeffs):
        if k:
            pw = pw * base
        if c:
            out = out + pw.scale(c)
        if pw.is_zero():
            break
    return out


def hyperpotential_from_data(rq, p, qpoly, N, field=QQ):
    """rho_a = p_a(xi_{f a}) xi'_{f a} - q_a(omega_{g a}) omega'_{g a}.

    ``p`` and ``qpoly`` map each arrow to a coefficient list (constant term
    first); ``p`` must be f-invariant and ``qpoly`` g-invariant.
    """
    q = rq.quiver
    for a in range(rq.n_arrows):
        if list(p[a]) != list(p[rq.f(a)]):
            raise InvarianceViolation("p is not f-invariant at %s" % q.name(a))
        if list(qpoly[a]) != list(qpoly[rq.g(a)]):
            raise InvarianceViolation("q is not g-invariant at %s" % q.name(a))
    fl = {a: len(rq.f.orbit(a)) for a in range(rq.n_arrows)}
    gl = {a: len(rq.g.orbit(a)) for a in range(rq.n_arrows)}

    def elem(word, start):
        return TruncatedElement.path(q, (start, word), N, field)

    rho = {}
    for a in range(rq.n_arrows):
        fa, ga = rq.f(a), rq.g(a)
        v = q.target[a]
        xi = elem(_cycle_path(rq.f, fa, fl[fa]), v)
        xi1 = elem(_cycle_path(rq.f, fa, fl[fa] - 1), v)
        om = elem(_cycle_path(rq.g, ga, gl[ga]), v)
        om1 = elem(_cycle_path(rq.g, ga, gl[ga] - 1), v)
        rho[a] = (_poly_eval(p[a], xi, v, q, N, field) * xi1
                  - _poly_eval(qpoly[a], om, v, q, N, field) * om1)
    return rho


# ---------------------------------------------------------------------------
# continuous endomorphisms

def substitute(phi, x):
    """Apply the endomorphism fixing idempotents and sending a to phi[a]."""
    q, N, field = x.quiver, x.N, x.field
    out = TruncatedElement.zero(q, N, field)
    cache = {}
    for p, c in x.terms.items():
        start, arrows = p
        acc = TruncatedElement.unit(q, start, N, field)
        for k, a in enumerate(arrows):
            pre = arrows[:k + 1]
            if pre in cache:
                acc = cache[pre]
                continue
            img = phi[a] if a in phi else TruncatedElement.arrow(q, a, N, field)
            acc = acc * img.truncate(N)
            cache[pre] = acc
        out = out + acc.scale(c)
    return out


def _linear_part(q, phi, field):
    mats = {}
    for a, img in phi.items():
        for p in img.terms:
            if p[0] != q.source[a] or path_target(q, p) != q.target[a]:
                raise ParallelClassViolation("phi[%s] is not parallel to it" % q.name(a))
            if not p[1]:
                raise NotInvertible("phi[%s] has a constant term" % q.name(a))
    classes = {}
    for a in range(q.n_arrows):
        classes.setdefault((q.source[a], q.target[a]), []).append(a)
    for arrows in classes.values():
        idx = {b: i for i, b in enumerate(arrows)}
        m = [[field.zero] * len(arrows) for _ in arrows]
        for i, a in enumerate(arrows):
            img = phi.get(a)
            if img is None:
                m[i][i] = field.one
                continue
            for p, c in img.terms.items():
                if len(p[1]) == 1:
                    m[i][idx[p[1][0]]] = c
        inv = inverse(m, field)
        if inv is None:
            raise NotInvertible("linear part is singular on arrows %s"
                                % ", ".join(q.name(a) for a in arrows))
        mats[tuple(arrows)] = (m, inv)
    return mats


def invert_substitution(phi, q, N, field=QQ):
    """psi with psi(phi(a)) = a for every arrow, correct up to degree N."""
    phi = {a: x.truncate(N) for a, x in phi.items()}
    mats = _linear_part(q, phi, field)

    def lin_apply(mat, arrows, vals):
        # vals: arrow -> element; returns arrow -> sum_j mat[i][j] vals[j]
        out = {}
        for i, a in enumerate(arrows):
            acc = TruncatedElement.zero(q, N, field)
            for j, b in enumerate(arrows):
                if mat[i][j]:
                    acc = acc + vals[b].scale(mat[i][j])
            out[a] = acc
        return out

    psi = {}
    for arrows, (_, inv) in mats.items():
        base = {b: TruncatedElement.arrow(q, b, N, field) for b in arrows}
        psi.update(lin_apply(inv, arrows, base))
    for d in range(2, N + 1):
        err = {}
        for a in range(q.n_arrows):
            img = phi.get(a, TruncatedElement.arrow(q, a, N, field))
            err[a] = (substitute(psi, img) - TruncatedElement.arrow(q, a, N, field)).homogeneous(d)
        if all(e.is_zero() for e in err.values()):
            continue
        for arrows, (_, inv) in mats.items():
            corr = lin_apply(inv, arrows, err)
            for b in arrows:
                psi[b] = psi[b] - corr[b]
    return psi


def apply_to_potential(phi, W):
    """phi(W) as a potential (apply to each cycle then rotate)."""
    x = TruncatedElement(W.quiver, W.N,
                         {(W.quiver.source[k[0]], k): c for k, c in W.terms.items()}, W.field)
    return Potential.from_element(substitute(phi, x))


# ---------------------------------------------------------------------------
# ideal membership: truncated rewriting basis

class TruncatedIdeal:
    """Closed two-sided ideal generated by ``generators``, computed in KQ/A^(N+1).

    Rules have a monic leading word equal to their shortest term.  A rule whose
    leading term is a trivial path kills its vertex.
    """

    def __init__(self, quiver, generators, N, field=QQ, max_words=200000, max_rules=20000):
        self.quiver, self.N, self.field = quiver, N, field
        self.max_words = max_words
        self.max_rules = max_rules
        self.generators = [g.truncate(N) for g in generators]
        for g in self.generators:
            if g.quiver != quiver or g.field != field:
                raise QuiverMismatch("generator over a different quiver or field")
        self.rules = {}       # lead arrows -> element (monic in lead)
        self.killed = set()
        self._lengths = {}
        self._lock = threading.Lock()
        self._words = None
        self._build()

    # -- reduction
    def _dead(self, start, arrows):
        if not self.killed:
            return False
        if start in self.killed:
            return True
        tgt = self.quiver.target
        return any(tgt[a] in self.killed for a in arrows)

    def _find(self, arrows):
        L = len(arrows)
        rules = self.rules
        for l in self._lengths:
            if l > L:
                continue
            for i in range(L - l + 1):
                w = arrows[i:i + l]
                if w in rules:
                    return i, w
        return None

    def _reduce_terms(self, terms):
        """Normal form of a term dict; returns a dict of normal paths."""
        N, zero = self.N, self.field.zero
        coef, heap = {}, []
        for p, c in terms.items():
            if c and len(p[1]) <= N and not self._dead(*p):
                k = path_key(p)
                if k in coef:
                    coef[k] = coef[k] + c
                else:
                    coef[k] = c
                    heapq.heappush(heap, k)
        out = {}
        while heap:
            k = heapq.heappop(heap)
            c = coef.pop(k, zero)
            if not c:
                continue
            _, arrows, start = k
            hit = self._find(arrows)
            if hit is None:
                out[(start, arrows)] = c
                continue
            i, w = hit
            pre, post = arrows[:i], arrows[i + len(w):]
            for (ts, tw), tc in self.rules[w].terms.items():
                if tw == w:
                    continue
                na = pre + tw + post
                if len(na) > N or self._dead(start, na):
                    continue
                nk = (len(na), na, start)
                if nk in coef:
                    coef[nk] = coef[nk] - c * tc
                else:
                    coef[nk] = -c * tc
                    heapq.heappush(heap, nk)
        return out

    def _elem(self, terms):
        return TruncatedElement(self.quiver, self.N, terms, self.field)

    def _overlaps(self, w1, w2):
        """S-elements for suffix(w1) == prefix(w2)."""
        out = []
        q, N, field = self.quiver, self.N, self.field
        r1, r2 = self.rules[w1], self.rules[w2]
        for k in range(1, min(len(w1), len(w2))):
            if len(w1) + len(w2) - k > N:
                continue
            if w1[-k:] != w2[:k]:
                continue
            right = w2[k:]
            left = w1[:-k]
            a = r1 * TruncatedElement.path(q, (q.source[right[0]], right), N, field)
            b = TruncatedElement.path(q, (q.source[left[0]], left), N, field) * r2
            out.append(a - b)
        return out

    def _build(self):
        queue, counter = [], 0

        def push(x):
            nonlocal counter
            for comp in x.components().values():
                lead = comp.leading()
                heapq.heappush(queue, (path_key(lead), counter, comp.terms))
                counter += 1

        for g in self.generators:
            push(g)
        while queue:
            _, _, terms = heapq.heappop(queue)
            red = self._reduce_terms(terms)
            if not red:
                continue
            lead = min(red, key=path_key)
            inv = self.field.one / red[lead]
            start, w = lead
            if not w:
                self.killed.add(start)
                for old in [u for u in self.rules if self._dead(self.quiver.source[u[0]], u)]:
                    push(self._drop(old))
                continue
            elem = self._elem({p: c * inv for p, c in red.items()})
            for old in [u for u in self.rules if _contains_word(u, w)]:
                push(self._drop(old))
            self.rules[w] = elem
            self._lengths[len(w)] = self._lengths.get(len(w), 0) + 1
            if len(self.rules) > self.max_rules:
                raise ComputationTooLarge("more than %d rewriting rules" % self.max_rules)
            for u in list(self.rules):
                for s in self._overlaps(w, u):
                    push(s)
                if u != w:
                    for s in self._overlaps(u, w):
                        push(s)
        self._lengths = dict(sorted(self._lengths.items()))

    def _drop(self, w):
        elem = self.rules.pop(w)
        self._lengths[len(w)] -= 1
        if not self._lengths[len(w)]:
            del self._lengths[len(w)]
        return elem

    # -- queries
    def _check_input(self, x):
        if x.quiver != self.quiver:
            raise QuiverMismatch("element over a different quiver")
        if x.degree() > self.N:
            raise DegreeTooHigh("element degree %d exceeds truncation %d" % (x.degree(), self.N))

    def normal_form(self, x):
        self._check_input(x)
        terms = {p: self.field(c) for p, c in x.terms.items()}
        return self._elem(self._reduce_terms(terms))

    def contains(self, x):
        return self.normal_form(x).is_zero()

    def normal_words(self):
        """All normal paths of length <= N (cached)."""
        with self._lock:
            if self._words is None:
                self._words = self._enumerate()
            return self._words

    def _enumerate(self):
        q, N = self.quiver, self.N
        leads = self.rules
        lengths = list(self._lengths)
        out = []
        stack = [(v, ()) for v in range(q.n_vertices) if v not in self.killed]
        while stack:
            p = stack.pop()
            out.append(p)
            if len(out) > self.max_words:
                raise ComputationTooLarge("more than %d normal words" % self.max_words)
            if len(p[1]) == N:
                continue
            for a in q.arrows_from(path_target(q, p)):
                if q.target[a] in self.killed:
                    continue
                w = p[1] + (a,)
                if any(l <= len(w) and w[-l:] in leads for l in lengths):
                    continue
                stack.append((p[0], w))
        out.sort(key=path_key)
        return out

    def hilbert(self):
        counts = [0] * (self.N + 1)
        for p in self.normal_words():
            counts[len(p[1])] += 1
        return counts

    def stabilized(self):
        """Two consecutive degrees below N carry no normal words."""
        h = self.hilbert()
        return any(h[d] == 0 and h[d + 1] == 0 for d in range(self.N))

    def dimension(self):
        return len(self.normal_words())

    def quotient_basis(self, max_len=None):
        words = self.normal_words()
        if max_len is not None:
            words = [p for p in words if len(p[1]) <= max_len]
        return words, self.stabilized()


def _contains_word(big, small):
    l = len(small)
    return any(big[i:i + l] == small for i in range(len(big) - l + 1))


def ideal_contains(I, x):
    return I.contains(x)


def normal_form(I, x):
    return I.normal_form(x)


def quotient_basis(I, max_len=None):
    return I.quotient_basis(max_len)


# ---------------------------------------------------------------------------
# independent oracle: plain linear span of u*g*v

def span_ideal_contains(q, generators, x, N, field=QQ, max_paths=3000):
    """Membership by row reducing the span of all u*g*v in KQ/A^(N+1).

    Only meant for small instances; used to cross-check ``TruncatedIdeal``.
    """
    paths = paths_up_to(q, N)
    if len(paths) > max_paths:
        raise ComputationTooLarge("%d paths exceed the oracle limit" % len(paths))
    index = {p: i for i, p in enumerate(paths)}
    ech = Echelon(len(paths), field)

    def vec(e):
        v = [field.zero] * len(paths)
        for p, c in e.terms.items():
            v[index[p]] = c
        return v

    for g in generators:
        g = g.truncate(N)
        for comp in g.components().values():
            low = comp.low_degree()
            s0 = next(iter(comp.terms))[0]
            t0 = path_target(q, next(iter(comp.terms)))
            for u in paths:
                if path_target(q, u) != s0 or len(u[1]) + low > N:
                    continue
                left = TruncatedElement.path(q, u, N, field) * comp
                for v in paths:
                    if v[0] != t0 or len(u[1]) + low + len(v[1]) > N:
                        continue
                    ech.add(vec(left * TruncatedElement.path(q, v, N, field)))
    return ech.contains(vec(x.truncate(N)))

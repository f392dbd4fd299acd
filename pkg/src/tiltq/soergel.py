"""The two-color marked diagram calculus and its evaluation into the quiver model.

Diagrams are sliced words: a term has a bottom color sequence (a string over
'r', 'g' in display order, leftmost strand first; the rightmost letter acts
first), a list of slices read bottom to top, and a marked flag for the
dead-end symbol sitting in the rightmost face.  Each slice is a tuple of
tokens, one per planar position:

    ('id', c)     identity strand            degree  0
    ('up', c)     dot creating a strand      degree +1
    ('down', c)   dot killing a strand       degree +1
    ('merge', c)  trivalent 2 -> 1           degree -1
    ('split', c)  trivalent 1 -> 2           degree -1

Slices with several generators are normalized into single-generator slices
(rightmost generator first); the evaluation functor is defined slice-wise.

Evaluation sends a color sequence x to the leading part of the translation
word applied to T_0 -- concretely the list of (vertex, shift) summands
computed by the leading rule (green climbs/doubles odd vertices, red even,
red at the dead end dies) -- and a generator over a right context with
leading vertex data to an explicit matrix of quiver elements.  Identity
strands to the left are filled in by the memoized transfer table.  The
scalar normalization (the powers of 2 below) is the unique one, in the
canonical tensor bases of the transfer table, for which the dot-on-trivalent
rules hold and the named loop diagram with its 1/2^i prefactor evaluates to
the loop path; it was derived mechanically rather than copied, which keeps
every sign and rescaling consistent by construction.
"""

from __future__ import annotations

from fractions import Fraction

from .quiver import (
    GradedModule,
    QuiverElem,
    QuiverMatrix,
    down,
    idem,
    loop,
    transfer_table,
    up,
)
from .scalars import LaurentPoly


class BoundaryMismatch(Exception):
    pass


class MarkPlacement(Exception):
    pass


class UnmarkedDiagram(Exception):
    pass


class ArityError(Exception):
    pass


TOKEN_ARITY = {"id": (1, 1), "up": (0, 1), "down": (1, 0), "merge": (2, 1), "split": (1, 2)}
TOKEN_DEGREE = {"id": 0, "up": 1, "down": 1, "merge": -1, "split": -1}
COLORS = ("r", "g")


def token(kind, color):
    if kind not in TOKEN_ARITY or color not in COLORS:
        raise ValueError(f"bad token {kind}({color})")
    return (kind, color)


def slice_boundaries(tokens, bottom):
    """Validate one slice against its bottom sequence; return the top."""
    pos = 0
    top = []
    for t in tokens:
        kind, color = t
        nb, nt = TOKEN_ARITY[kind]
        legs = bottom[pos: pos + nb]
        if len(legs) < nb:
            raise ArityError(f"slice {tokens} overruns the {len(bottom)}-strand boundary")
        if any(c != color for c in legs):
            raise ArityError(f"token {kind}({color}) sits on strands {legs!r}")
        pos += nb
        top.append(color * nt)
    if pos != len(bottom):
        raise ArityError(
            f"slice {tokens} covers {pos} strands of a {len(bottom)}-strand boundary"
        )
    return "".join(top)


def _normalize_slices(bottom, slices):
    """Split multi-generator slices so each has exactly one generator.

    Within one slice the generators act on disjoint strands, so any order
    gives the same diagram; the rightmost generator is applied first.
    """
    out = []
    cur = bottom
    for tokens in slices:
        tokens = tuple(tokens)
        slice_boundaries(tokens, cur)  # arity check on the raw slice
        gens = [k for k, t in enumerate(tokens) if t[0] != "id"]
        if len(gens) <= 1:
            top = slice_boundaries(tokens, cur)
            if gens or tokens:
                out.append(tokens)
            else:
                out.append(tokens)
            cur = top
            continue
        for which in reversed(gens):
            step = []
            for k, t in enumerate(tokens):
                if k == which:
                    step.append(t)
                elif k < which:
                    # not yet applied: keep identities on the bottom strands
                    step.extend(("id", c) for c in _token_bottom(t))
                else:
                    # already applied: identities on the top strands
                    step.extend(("id", c) for c in _token_top(t))
            step = tuple(step)
            out.append(step)
            cur = slice_boundaries(step, cur)
    return tuple(out), cur


def _token_bottom(t):
    kind, color = t
    return color * TOKEN_ARITY[kind][0]


def _token_top(t):
    kind, color = t
    return color * TOKEN_ARITY[kind][1]


class DiagramTerm:
    """A single sliced diagram with an optional dead-end mark."""

    __slots__ = ("bottom", "slices", "top", "marked")

    def __init__(self, bottom: str, slices, marked: bool = False):
        if any(c not in COLORS for c in bottom):
            raise ValueError(f"bad colors in {bottom!r}")
        self.bottom = bottom
        self.slices, self.top = _normalize_slices(bottom, slices)
        self.marked = bool(marked)

    def degree(self) -> int:
        return sum(TOKEN_DEGREE[t[0]] for sl in self.slices for t in sl)

    def key(self):
        return (self.bottom, self.slices, self.marked)

    def __eq__(self, other):
        return isinstance(other, DiagramTerm) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def with_mark(self, marked=True):
        return DiagramTerm(self.bottom, self.slices, marked)

    def __repr__(self):
        mark = "*" if self.marked else ""
        body = " / ".join(
            " ".join(f"{k}({c})" for k, c in sl) if sl else "(empty)" for sl in self.slices
        )
        return f"<{self.bottom} -> {self.top}{mark}: {body or 'identity'}>"


class DiagramLinComb:
    """A rational formal combination of terms with a common boundary."""

    __slots__ = ("bottom", "top", "marked", "terms")

    def __init__(self, bottom, top, marked, terms=None):
        self.bottom, self.top, self.marked = bottom, top, bool(marked)
        clean = {}
        if terms:
            for t, c in terms.items():
                c = Fraction(c)
                if c == 0:
                    continue
                if (t.bottom, t.top, t.marked) != (bottom, top, self.marked):
                    raise BoundaryMismatch("term boundary disagrees with the combination")
                clean[t] = c
        self.terms = clean

    @classmethod
    def of(cls, term: DiagramTerm, coeff=1):
        return cls(term.bottom, term.top, term.marked, {term: Fraction(coeff)})

    @classmethod
    def zero_like(cls, bottom, top, marked):
        return cls(bottom, top, marked, {})

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        if (self.bottom, self.top, self.marked) != (other.bottom, other.top, other.marked):
            raise BoundaryMismatch("adding combinations with different boundaries")
        out = dict(self.terms)
        for t, c in other.terms.items():
            nc = out.get(t, Fraction(0)) + c
            if nc == 0:
                out.pop(t, None)
            else:
                out[t] = nc
        return DiagramLinComb(self.bottom, self.top, self.marked, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return DiagramLinComb(
            self.bottom, self.top, self.marked,
            {t: x * Fraction(c) for t, x in self.terms.items()},
        )

    def with_mark(self, marked=True):
        return DiagramLinComb(
            self.bottom, self.top, marked,
            {t.with_mark(marked): c for t, c in self.terms.items()},
        )

    def degrees(self):
        return sorted({t.degree() for t in self.terms})

    def __repr__(self):
        if not self.terms:
            return f"<0: {self.bottom} -> {self.top}>"
        return " + ".join(f"({c})*{t!r}" for t, c in self.terms.items())


def identity_term(seq: str, marked=False) -> DiagramTerm:
    return DiagramTerm(seq, [], marked)


def identity_diagram(seq: str, marked=False) -> DiagramLinComb:
    return DiagramLinComb.of(identity_term(seq, marked))


def _compose_terms_v(upper: DiagramTerm, lower: DiagramTerm) -> DiagramTerm:
    if lower.top != upper.bottom:
        raise BoundaryMismatch(f"cannot stack {upper.bottom!r} on top of {lower.top!r}")
    if lower.marked != upper.marked:
        raise BoundaryMismatch("marked flags differ under vertical composition")
    return DiagramTerm(lower.bottom, list(lower.slices) + list(upper.slices), lower.marked)


def compose_v(upper: DiagramLinComb, lower: DiagramLinComb) -> DiagramLinComb:
    """Glue ``upper`` on top of ``lower`` (lower acts first), bilinearly."""
    if lower.top != upper.bottom:
        raise BoundaryMismatch(f"cannot stack {upper.bottom!r} on top of {lower.top!r}")
    if lower.marked != upper.marked:
        raise BoundaryMismatch("marked flags differ under vertical composition")
    out = DiagramLinComb.zero_like(lower.bottom, upper.top, lower.marked)
    for t1, c1 in upper.terms.items():
        for t2, c2 in lower.terms.items():
            out = out + DiagramLinComb.of(_compose_terms_v(t1, t2), c1 * c2)
    return out


def _compose_terms_h(left: DiagramTerm, right: DiagramTerm) -> DiagramTerm:
    height = max(len(left.slices), len(right.slices))

    def padded(term):
        levels = []
        cur = term.bottom
        for sl in term.slices:
            levels.append((sl, cur))
            cur = slice_boundaries(sl, cur)
        for _ in range(height - len(term.slices)):
            levels.append((tuple(("id", c) for c in cur), cur))
        return levels

    lev_l, lev_r = padded(left), padded(right)
    slices = [lev_l[k][0] + lev_r[k][0] for k in range(height)]
    return DiagramTerm(left.bottom + right.bottom, slices, right.marked)


def compose_h(left: DiagramLinComb, right: DiagramLinComb) -> DiagramLinComb:
    """Place ``left`` to the left of ``right``.

    Only the right factor may carry the dead-end mark (it sits in the
    rightmost face and cannot move).
    """
    if left.marked:
        raise MarkPlacement("the dead-end mark must stay in the rightmost face")
    out = DiagramLinComb.zero_like(left.bottom + right.bottom, left.top + right.top, right.marked)
    for t1, c1 in left.terms.items():
        for t2, c2 in right.terms.items():
            out = out + DiagramLinComb.of(_compose_terms_h(t1, t2), c1 * c2)
    return out


def degree(D) -> int:
    """Degree of a term, or the common degree of a homogeneous combination."""
    if isinstance(D, DiagramTerm):
        return D.degree()
    degs = D.degrees()
    if len(degs) != 1:
        raise ValueError(f"combination is not homogeneous: degrees {degs}")
    return degs[0]


# ---------------------------------------------------------------------------
# color bookkeeping


def block_count(seq: str) -> int:
    """Number of color blocks of a sequence (its leading vertex when green-led)."""
    count, prev = 0, None
    for c in reversed(seq):
        if c != prev:
            count += 1
            prev = c
    return count


def alternating(i: int, start: str = "g") -> str:
    """The alternating sequence of length i whose rightmost letter is ``start``."""
    other = "r" if start == "g" else "g"
    return "".join(start if k % 2 == 1 else other for k in range(i, 0, -1))


COLOR_WANT = {"g": 1, "r": 0}
COLOR_LO = {"g": 1, "r": 2}


def object_of(seq: str) -> GradedModule:
    """The leading-part object of a color sequence: summands (vertex, shift)."""
    summands = [(0, 0)]
    for c in reversed(seq):
        want, lo = COLOR_WANT[c], COLOR_LO[c]
        new = []
        for k, s in summands:
            if k % 2 == want and k >= lo:
                new += [(k, s - 1), (k, s + 1)]
            elif (k + 1) % 2 == want and k + 1 >= lo:
                new.append((k + 1, s))
            # otherwise the summand dies (red at the dead end)
        summands = new
    return GradedModule(summands)


# ---------------------------------------------------------------------------
# evaluation


def _matches(color: str, vertex: int) -> bool:
    return vertex % 2 == COLOR_WANT[color] and vertex >= COLOR_LO[color]


def _kept(color, vertex):
    """(functor index j, slot indices kept, new summand shifts rel. slot degree).

    For a doubling vertex both middle slots survive; for a climbing vertex
    the single slot of the neighbouring middle space; None when the summand
    dies.
    """
    if _matches(color, vertex):
        return (vertex, (0, 1))
    j = vertex + 1
    if j % 2 == COLOR_WANT[color] and j >= COLOR_LO[color]:
        return (j, (0,))
    return None


def lift_left(color: str, F: QuiverMatrix) -> QuiverMatrix:
    """One identity strand of ``color`` added on the left: the leading block
    of the through-the-wall functor applied to F, via the transfer table."""
    m = F.m
    table = transfer_table(m)
    src_obj = object_of_module(color, F.source)
    tgt_obj = object_of_module(color, F.target)
    z = QuiverElem.zero(m)
    ent = [[z] * len(src_obj) for _ in range(len(tgt_obj))]

    def layout(module):
        offs, acc = [], 0
        for a, s in module:
            kept = _kept(color, a)
            if kept is None:
                offs.append(None)
            else:
                offs.append((kept[0], acc, kept[1]))
                acc += len(kept[1])
        return offs

    src_lay, tgt_lay = layout(F.source), layout(F.target)
    for r, (b, _) in enumerate(F.target):
        if tgt_lay[r] is None:
            continue
        jt, toff, tslots = tgt_lay[r]
        for c, (a, _) in enumerate(F.source):
            if src_lay[c] is None:
                continue
            js, soff, sslots = src_lay[c]
            if js != jt:
                continue  # per-index blocks are diagonal in j
            elem = F.entries[r][c]
            if not elem:
                continue
            for path, coeff in elem.items():
                for si, ti, cf in table.get((js, a, b, path), ()):
                    if si in sslots and ti in tslots:
                        rr = toff + tslots.index(ti)
                        cc = soff + sslots.index(si)
                        ent[rr][cc] = ent[rr][cc] + QuiverElem.of_path(m, idem(js), coeff * cf)
    return QuiverMatrix(m, src_obj, tgt_obj, ent)


def object_of_module(color: str, M: GradedModule) -> GradedModule:
    """Leading image of a summand list under one more letter on the left."""
    out = []
    for k, s in M:
        kept = _kept(color, k)
        if kept is None:
            continue
        j, slots = kept
        if len(slots) == 2:
            out += [(k, s - 1), (k, s + 1)]
        else:
            out.append((j, s))
    return GradedModule(out)


def _generator_matrix(gen_kind: str, color: str, x_right: str, m: int) -> QuiverMatrix:
    """The evaluation of a single generator sitting directly left of x_right."""
    M = object_of(x_right)
    N = object_of(color + x_right)
    NN = object_of(color + color + x_right)
    z = QuiverElem.zero(m)
    kappa = block_count(color + x_right)

    if gen_kind == "up":
        ent = [[z] * len(M) for _ in range(len(N))]
        for c, (k, s) in enumerate(M):
            kept = _kept(color, k)
            if kept is None:
                continue
            j, slots = kept
            base = sum(len(_kept(color, kk)[1]) if _kept(color, kk) else 0 for kk, _ in M.summands[:c])
            if len(slots) == 2:
                ent[base][c] = QuiverElem.of_path(m, loop(k))
                ent[base + 1][c] = QuiverElem.of_path(m, idem(k))
            else:
                ent[base][c] = QuiverElem.of_path(m, up(k))
        return QuiverMatrix(m, M, N, ent)

    if gen_kind == "down":
        ent = [[z] * len(N) for _ in range(len(M))]
        for r, (k, s) in enumerate(M):
            kept = _kept(color, k)
            if kept is None:
                continue
            j, slots = kept
            base = sum(len(_kept(color, kk)[1]) if _kept(color, kk) else 0 for kk, _ in M.summands[:r])
            if len(slots) == 2:
                ent[r][base] = QuiverElem.of_path(m, idem(k), Fraction(2) ** k)
                ent[r][base + 1] = QuiverElem.of_path(m, loop(k), Fraction(2) ** k)
            else:
                ent[r][base] = QuiverElem.of_path(m, down(k + 1), Fraction(2) ** (k + 1))
        return QuiverMatrix(m, N, M, ent)

    if gen_kind == "merge":
        # target N, source NN = per-summand doubling of N; pick the <+1> slot
        ent = [[z] * len(NN) for _ in range(len(N))]
        for n, (k, s) in enumerate(N):
            ent[n][2 * n + 1] = QuiverElem.of_path(m, idem(k))
        return QuiverMatrix(m, NN, N, ent)

    if gen_kind == "split":
        ent = [[z] * len(N) for _ in range(len(NN))]
        for n, (k, s) in enumerate(N):
            ent[2 * n][n] = QuiverElem.of_path(m, idem(k), Fraction(1, 2 ** kappa))
        return QuiverMatrix(m, N, NN, ent)

    raise ValueError(f"unknown generator {gen_kind}")


def _slice_matrix(tokens, bottom: str, m: int) -> QuiverMatrix:
    """Evaluate one normalized slice (at most one generator)."""
    gens = [(k, t) for k, t in enumerate(tokens) if t[0] != "id"]
    if not gens:
        return QuiverMatrix.identity(m, object_of(bottom))
    (pos, (kind, color)), = gens
    left = "".join(t[1] for t in tokens[:pos])
    nb = TOKEN_ARITY[kind][0]
    start = sum(TOKEN_ARITY[t[0]][0] for t in tokens[:pos])
    x_right = bottom[start + nb:]
    F = _generator_matrix(kind, color, x_right, m)
    for c in reversed(left):
        F = lift_left(c, F)
    return F


def evaluate(D, m: int = None) -> QuiverMatrix:
    """Evaluate a marked diagram (or combination) to a matrix of quiver elements.

    The cutoff defaults to boundary length + 3, keeping every intermediate
    object away from the truncation.
    """
    if isinstance(D, DiagramTerm):
        D = DiagramLinComb.of(D)
    if not D.marked:
        raise UnmarkedDiagram("evaluation is only defined for marked diagrams")
    if m is None:
        m = max(len(D.bottom), len(D.top)) + 3
    src = object_of(D.bottom)
    tgt = object_of(D.top)
    out = QuiverMatrix.zero(m, src, tgt)
    for term, coeff in D.terms.items():
        F = QuiverMatrix.identity(m, src)
        cur = term.bottom
        for sl in term.slices:
            F = _slice_matrix(sl, cur, m).compose(F)
            cur = slice_boundaries(sl, cur)
        out = out + F.scale(coeff)
    return out


# ---------------------------------------------------------------------------
# named diagrams, projectors, pitchforks


def place(kind: str, color: str, left: str, right: str, marked=False) -> DiagramLinComb:
    """One generator with identity strands ``left`` and ``right`` around it."""
    bottom = left + color * TOKEN_ARITY[kind][0] + right
    tokens = [("id", c) for c in left] + [token(kind, color)] + [("id", c) for c in right]
    return DiagramLinComb.of(DiagramTerm(bottom, [tokens], marked))


def color_at(i: int) -> str:
    """Color of the i-th strand (counted from 1 at the right) of x_{..-tst}."""
    return "g" if i % 2 == 1 else "r"


def identity_named(i: int, marked=True) -> DiagramLinComb:
    return identity_diagram(alternating(i), marked)


def up_named(i: int, marked=True) -> DiagramLinComb:
    """The diagram for u_i: x_i -> x_{i+1} (a new dotted strand at the left)."""
    return place("up", color_at(i + 1), "", alternating(i), marked)


def down_named(i: int, marked=True) -> DiagramLinComb:
    """The diagram for d_i: x_i -> x_{i-1}, carrying its 1/2^i prefactor."""
    return place("down", color_at(i), "", alternating(i - 1), marked).scale(Fraction(1, 2 ** i))


def eps_named(i: int, marked=True) -> DiagramLinComb:
    """The loop diagram on x_i: break the leftmost strand, prefactor 1/2^i."""
    lower = place("down", color_at(i), "", alternating(i - 1), marked)
    upper = place("up", color_at(i), "", alternating(i - 1), marked)
    return compose_v(upper, lower).scale(Fraction(1, 2 ** i))


def barbell(color: str, marked=False) -> DiagramLinComb:
    """The floating dotted edge of one color (an endomorphism of the empty object)."""
    lower = place("up", color, "", "", marked)
    upper = place("down", color, "", "", marked)
    return compose_v(upper, lower)


def broken_strand(color: str, marked=False) -> DiagramLinComb:
    """A strand killed by a dot and recreated: c -> 0 -> c."""
    lower = place("down", color, "", "", marked)
    upper = place("up", color, "", "", marked)
    return compose_v(upper, lower)


def fork(width: int, end_color: str, marked=True) -> DiagramLinComb:
    """The alternating pitchfork on a width-strand window, collapsing to one.

    width must be odd >= 3 so both outer strands share ``end_color``; the
    inner other-color strand is killed by a dot and the outer pair merged,
    recursively from the right.
    """
    if width < 3 or width % 2 == 0:
        raise ValueError("pitchforks need an odd window of width >= 3")
    c, o = end_color, ("r" if end_color == "g" else "g")
    if width == 3:
        lower = place("down", o, c, c, marked)
        upper = place("merge", c, "", "", marked)
        return compose_v(upper, lower)
    inner = fork(width - 2, c, marked)
    step = compose_h(identity_diagram(c + o), inner)
    return compose_v(fork(3, c, marked), step)


def jones_wenzl(i: int, start_color: str = "g", marked=False) -> DiagramLinComb:
    """The i-th projector on the alternating sequence, expanded into terms.

    Recursion: JW_i = (id (x) JW_{i-1})
                      - ((i-2)/(i-1)) * (id (x) JW_{i-1})
                        o reflected-fork o (id (x) JW_{i-3}) o fork
                        o (id (x) JW_{i-1}),
    with JW_0 the empty diagram and JW_1, JW_2 identities.  Term counts grow
    fast; expansion is capped at i = 5 (use evaluate_jones_wenzl beyond).
    """
    if i < 0:
        raise ValueError("projector index must be non-negative")
    if i > 5:
        raise ValueError("expansion too large; use evaluate_jones_wenzl instead")
    seq = alternating(i, start_color)
    if i <= 2:
        return identity_diagram(seq, marked)
    outer = compose_h(identity_diagram(seq[0]), jones_wenzl(i - 1, start_color, marked))
    f = fork_at_left(i, start_color, marked)
    fbar = reflected_fork_at_left(i, start_color, marked)
    mid_seq = alternating(i - 2, start_color)
    mid = compose_h(identity_diagram(mid_seq[0]), jones_wenzl(i - 3, start_color, marked))
    sandwich = compose_v(outer, compose_v(fbar, compose_v(mid, compose_v(f, outer))))
    return outer - sandwich.scale(Fraction(i - 2, i - 1))


def fork_at_left(i: int, start_color: str = "g", marked=False) -> DiagramLinComb:
    """The 3-pitchfork on the three leftmost strands of x_i: x_i -> x_{i-2}."""
    seq = alternating(i, start_color)
    return compose_h(fork(3, seq[0], False), identity_diagram(seq[3:], marked))


def reflected_fork_at_left(i: int, start_color: str = "g", marked=False) -> DiagramLinComb:
    """The vertical reflection: x_{i-2} -> x_i (split then a dotted strand)."""
    seq = alternating(i, start_color)
    c, o = seq[0], seq[1]
    lower = place("split", c, "", "", False)
    upper = place("up", o, c, c, False)
    refl3 = compose_v(upper, lower)
    return compose_h(refl3, identity_diagram(seq[3:], marked))


def evaluate_jones_wenzl(i: int, start_color: str = "g", m: int = None) -> QuiverMatrix:
    """Evaluation of the i-th projector without expanding its terms."""
    if m is None:
        m = i + 3
    seq = alternating(i, start_color)
    if i <= 2:
        return QuiverMatrix.identity(m, object_of(seq))
    prev = evaluate_jones_wenzl(i - 1, start_color, m)
    outer = lift_left(seq[0], prev)
    f = evaluate(fork_at_left(i, start_color, True), m)
    fbar = evaluate(reflected_fork_at_left(i, start_color, True), m)
    mid_seq = alternating(i - 2, start_color)
    mid = lift_left(mid_seq[0], evaluate_jones_wenzl(i - 3, start_color, m))
    sandwich = outer.compose(fbar).compose(mid).compose(f).compose(outer)
    return outer - sandwich.scale(Fraction(i - 2, i - 1))


# ---------------------------------------------------------------------------
# deciding equality and hom dimensions


def diagrams_equal(A: DiagramLinComb, B: DiagramLinComb, m: int = None) -> bool:
    """Semantic equality of marked diagrams, projected through the boundary
    projectors when the boundaries are alternating.

    Evaluation is a complete invariant between projector-images of
    alternating sequences; for other boundaries raw evaluation equality is
    a sound but only semi-decided test (see the module docstring).
    """
    if (A.bottom, A.top) != (B.bottom, B.top):
        raise BoundaryMismatch("cannot compare diagrams with different boundaries")
    if m is None:
        m = max(len(A.bottom), len(A.top)) + 3
    ea, eb = evaluate(A, m), evaluate(B, m)
    for seq, side in ((A.bottom, "src"), (A.top, "tgt")):
        if seq and seq == alternating(len(seq), "g"):
            jw = evaluate_jones_wenzl(len(seq), "g", m)
            if side == "src":
                ea, eb = ea.compose(jw), eb.compose(jw)
            else:
                ea, eb = jw.compose(ea), jw.compose(eb)
    return ea == eb


def hom_dimension(x: str, x2: str) -> LaurentPoly:
    """Graded dimension of the hom space between alternating green-led words."""
    for seq in (x, x2):
        if seq and (seq != alternating(len(seq)) ):
            raise ValueError(f"{seq!r} is not alternating starting with g")
    i, j = len(x), len(x2)
    if i == j == 0:
        return LaurentPoly.one()
    if i == j:
        return LaurentPoly({0: 1, 2: 1})
    if abs(i - j) == 1:
        return LaurentPoly.gen()
    return LaurentPoly.zero()


def empty_endo_barbell_poly(D: DiagramLinComb) -> dict:
    """Normal form of a floating, barbell-only endomorphism of the empty object.

    Returns a map (red count, green count) -> coefficient.  Unmarked
    diagrams only; terms must consist solely of dots (each up paired with
    the down that kills the same strand), which is exactly the barbell
    polynomial algebra.
    """
    if D.marked:
        raise ValueError("the barbell normal form lives in the unmarked calculus")
    if D.bottom or D.top:
        raise BoundaryMismatch("not an endomorphism of the empty object")
    out = {}
    for term, coeff in D.terms.items():
        counts = {"r": 0, "g": 0}
        open_strands = 0
        for sl in term.slices:
            for kind, color in sl:
                if kind == "up":
                    counts[color] += 1
                    open_strands += 1
                elif kind == "down":
                    open_strands -= 1
                elif kind != "id":
                    raise ValueError("trivalent vertices: not in barbell normal form")
        if open_strands:
            raise ValueError("unbalanced dots")
        key = (counts["r"], counts["g"])
        out[key] = out.get(key, Fraction(0)) + coeff
        if out[key] == 0:
            del out[key]
    return out

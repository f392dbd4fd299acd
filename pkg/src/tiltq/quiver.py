"""The zigzag-with-dead-end path algebras Q_m / Q_oo and their graded modules.

Q_m is the path algebra of the double quiver on vertices 0..m modulo

    u_i u_{i-1} = 0 = d_i d_{i+1},     d_{i+1} u_i = eps_i = u_{i-1} d_i,
    d_1 u_0 = 0   (the dead-end relation),

graded by path length.  Paths compose like functions: in ``p * q`` the path
q is applied first.  A basis is given by the idempotents e_i, the arrows
u_i: i -> i+1 and d_i: i -> i-1, and the loops eps_i (i >= 1); all structure
constants are integers, so coefficients here are plain Fractions and the
cyclotomic field never enters.

Q_oo is handled as "cutoff m plus stability": every operation takes m, and
results away from the boundary are independent of m (tested, not assumed).

Right modules are formal sums of shifted indecomposable projectives iP
(written as (vertex, shift) pairs); morphisms between them are matrices of
QuiverElems acting by post-composition.  The translation endofunctors U_i
tensor with the bimodule B_i = P_i (x) iP<-1>; their effect on morphisms is
driven by a transfer table computed once per cutoff by explicit tensor
algebra over the canonical middle bases, which fixes all scalar conventions
mechanically.
"""

from __future__ import annotations

from fractions import Fraction

from .linalg import RowSpace
from .scalars import LaurentPoly


class IncompatibleShapes(Exception):
    pass


# ---------------------------------------------------------------------------
# paths and the algebra


def idem(i):
    return ("e", i)


def up(i):
    return ("u", i)


def down(i):
    return ("d", i)


def loop(i):
    return ("eps", i)


def path_source(p):
    kind, i = p
    return i


def path_target(p):
    kind, i = p
    if kind == "u":
        return i + 1
    if kind == "d":
        return i - 1
    return i


def path_degree(p):
    return {"e": 0, "u": 1, "d": 1, "eps": 2}[p[0]]


def path_valid(p, m):
    kind, i = p
    if kind == "e":
        return 0 <= i <= m
    if kind == "u":
        return 0 <= i <= m - 1
    if kind == "d":
        return 1 <= i <= m
    return 1 <= i <= m  # eps


def compose_paths(p, q):
    """The path p after q, or None when the product is zero in Q_m."""
    if path_target(q) != path_source(p):
        return None
    pk, pi = p
    qk, qi = q
    if pk == "e":
        return q
    if qk == "e":
        return p
    if pk == "d" and qk == "u":
        # d_{i+1} u_i = eps_i, except d_1 u_0 = 0 at the dead end
        return loop(qi) if qi >= 1 else None
    if pk == "u" and qk == "d":
        # u_{i-1} d_i = eps_i
        return loop(qi)
    # uu, dd, and anything involving eps of positive length vanish
    return None


def algebra_basis(m):
    out = [idem(i) for i in range(m + 1)]
    out += [up(i) for i in range(m)]
    out += [down(i) for i in range(1, m + 1)]
    out += [loop(i) for i in range(1, m + 1)]
    return out


class QuiverElem:
    """A Q-linear combination of basis paths of Q_m."""

    __slots__ = ("m", "_terms")

    def __init__(self, m, terms=None):
        self.m = m
        clean = {}
        if terms:
            for p, c in terms.items():
                c = Fraction(c)
                if c != 0:
                    if not path_valid(p, m):
                        raise ValueError(f"path {p} does not exist at cutoff {m}")
                    clean[p] = c
        self._terms = clean

    @classmethod
    def zero(cls, m):
        return cls(m, {})

    @classmethod
    def of_path(cls, m, p, coeff=1):
        return cls(m, {p: Fraction(coeff)})

    def items(self):
        return self._terms.items()

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, QuiverElem):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        if other == 0:
            return self
        out = dict(self._terms)
        for p, c in other._terms.items():
            nc = out.get(p, Fraction(0)) + c
            if nc == 0:
                out.pop(p, None)
            else:
                out[p] = nc
        return QuiverElem(max(self.m, other.m), out)

    __radd__ = __add__

    def __neg__(self):
        return QuiverElem(self.m, {p: -c for p, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QuiverElem(self.m, {p: c * other for p, c in self._terms.items()})
        out = {}
        for p, cp in self._terms.items():
            for q, cq in other._terms.items():
                r = compose_paths(p, q)
                if r is not None:
                    out[r] = out.get(r, Fraction(0)) + cp * cq
        return QuiverElem(max(self.m, other.m), out)

    __rmul__ = __mul__

    def scale(self, c):
        return QuiverElem(self.m, {p: x * Fraction(c) for p, x in self._terms.items()})

    def __str__(self):
        if not self._terms:
            return "0"
        names = {"e": "e", "u": "u", "d": "d", "eps": "eps"}
        parts = []
        for p, c in sorted(self._terms.items()):
            mono = f"{names[p[0]]}{p[1]}"
            if c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"QuiverElem(m={self.m}, {self._terms!r})"


def multiply(a: QuiverElem, b: QuiverElem) -> QuiverElem:
    """Algebra product a * b (b applied first)."""
    return a * b


def center_basis(m: int) -> list:
    """A homogeneous basis of the center of Q_m, by solving za = az.

    The result is the span of the unit e_0 + ... + e_m together with all
    loops eps_i, computed by brute force per degree.
    """
    basis = algebra_basis(m)
    index = {p: k for k, p in enumerate(basis)}
    out = []
    for degree in (0, 1, 2):
        unknowns = [p for p in basis if path_degree(p) == degree]
        if not unknowns:
            continue
        rows = []
        for a in basis:
            # z*a - a*z = 0, coefficients of each result path
            coeffs = {}
            for k, p in enumerate(unknowns):
                r1 = compose_paths(p, a)
                if r1 is not None:
                    coeffs.setdefault(r1, [Fraction(0)] * len(unknowns))[k] += 1
                r2 = compose_paths(a, p)
                if r2 is not None:
                    coeffs.setdefault(r2, [Fraction(0)] * len(unknowns))[k] -= 1
            for vec in coeffs.values():
                rows.append(vec)
        # nullspace of the stacked rows
        space = RowSpace(len(unknowns))
        for r in rows:
            space.add(r)
        pivots = {p for p, _ in space.rows}
        free = [k for k in range(len(unknowns)) if k not in pivots]
        for k in free:
            vec = [Fraction(0)] * len(unknowns)
            vec[k] = Fraction(1)
            # back-substitute pivot variables
            for pivot, row in reversed(space.rows):
                vec[pivot] = -sum(row[j] * vec[j] for j in range(len(unknowns)) if j != pivot)
            out.append(QuiverElem(m, {unknowns[j]: vec[j] for j in range(len(unknowns))}))
    return out


# ---------------------------------------------------------------------------
# graded modules and hom-spaces


class GradedModule:
    """A formal direct sum of shifted projectives iP<s> over Q_m."""

    __slots__ = ("summands",)

    def __init__(self, summands=()):
        self.summands = tuple((int(v), int(s)) for v, s in summands)

    def __iter__(self):
        return iter(self.summands)

    def __len__(self):
        return len(self.summands)

    def __eq__(self, other):
        return isinstance(other, GradedModule) and self.summands == other.summands

    def __hash__(self):
        return hash(self.summands)

    def shifted(self, k):
        return GradedModule((v, s + k) for v, s in self.summands)

    def multiset(self):
        return tuple(sorted(self.summands))

    def same_summands(self, other):
        """Equality as graded multisets, forgetting the ordering."""
        return self.multiset() == other.multiset()

    def to_json(self):
        return [[v, s] for v, s in self.summands]

    def __str__(self):
        if not self.summands:
            return "0"
        return " + ".join(
            f"P{v}" + (f"<{s:+d}>" if s else "") for v, s in self.summands
        )

    __repr__ = __str__


class TrivModule(GradedModule):
    """A formal sum of shifted one-dimensional simples over the trivial quotient."""

    def __str__(self):
        if not self.summands:
            return "0"
        return " + ".join(
            f"S{v}" + (f"<{s:+d}>" if s else "") for v, s in self.summands
        )

    __repr__ = __str__


def hom_space(i: int, j: int, m: int):
    """(basis of Hom(iP, jP) as QuiverElems, Poincare polynomial).

    The basis consists of post-compositions by the paths from i to j.
    """
    if not (0 <= i <= m and 0 <= j <= m):
        raise ValueError("vertices out of range")
    paths = []
    if i == j:
        paths.append(idem(i))
        if i >= 1:
            paths.append(loop(i))
    elif j == i + 1:
        paths.append(up(i))
    elif j == i - 1:
        paths.append(down(i))
    basis = [QuiverElem.of_path(m, p) for p in paths]
    poly = LaurentPoly({})
    for p in paths:
        poly = poly + LaurentPoly.gen(path_degree(p))
    return basis, poly


def hom_poincare(i: int, j: int) -> LaurentPoly:
    """Graded dimension of Hom(iP, jP), independent of the cutoff."""
    if i == j:
        return LaurentPoly({0: 1, 2: 1}) if i >= 1 else LaurentPoly.one()
    if abs(i - j) == 1:
        return LaurentPoly.gen(1)
    return LaurentPoly.zero()


def module_hom_poincare(M: GradedModule, N: GradedModule) -> LaurentPoly:
    """Graded dimension of Hom(M, N) in the graded module category."""
    out = LaurentPoly.zero()
    for a, s in M:
        for b, t in N:
            out = out + hom_poincare(a, b).shift(t - s)
    return out


# ---------------------------------------------------------------------------
# the functors U_i, U_even, U_odd and the wall functors, on objects


def functor_indices(a: int, parity: str, m: int) -> list:
    """Indices j of the given parity with U_j(aP) nonzero, in ascending order."""
    lo = 1 if parity == "odd" else 2
    want = 1 if parity == "odd" else 0
    return [j for j in (a - 1, a, a + 1) if j % 2 == want and lo <= j <= m]


def apply_U(i: int, M: GradedModule, m: int) -> GradedModule:
    """U_i(M) = M (x) B_i, summand-wise."""
    if not (1 <= i <= m):
        raise ValueError("functor index must satisfy 1 <= i <= m")
    out = []
    for a, s in M:
        if a == i:
            out += [(i, s - 1), (i, s + 1)]
        elif abs(a - i) == 1:
            out.append((i, s))
    return GradedModule(out)


def apply_U_parity(parity: str, M: GradedModule, m: int) -> GradedModule:
    """U_even or U_odd on objects; per summand only neighbouring indices act."""
    out = []
    for a, s in M:
        for j in functor_indices(a, parity, m):
            out += list(apply_U(j, GradedModule([(a, s)]), m))
    return GradedModule(out)


def apply_U_even(M, m):
    return apply_U_parity("even", M, m)


def apply_U_odd(M, m):
    return apply_U_parity("odd", M, m)


def wall_indices(a: int, parity: str, m: int) -> list:
    # wall functors include index 0 on the even side
    want = 1 if parity == "odd" else 0
    return [j for j in (a - 1, a, a + 1) if j % 2 == want and 0 <= j <= m]


def apply_U_wall_single(direction: str, j: int, M, m: int):
    """One wall functor: onto = (x) P_j, out of = simple(j) -> jP<-1>."""
    if direction == "onto":
        out = []
        for a, s in M:
            if a == j:
                out += [(j, s), (j, s + 2)] if j >= 1 else [(j, s)]
            elif abs(a - j) == 1:
                out.append((j, s + 1))
        return TrivModule(out)
    if direction == "outof":
        out = []
        for a, s in M:
            if a == j:
                out.append((j, s - 1))
        return GradedModule(out)
    raise ValueError("direction must be 'onto' or 'outof'")


def apply_U_wall(direction: str, parity: str, M, m: int):
    """The parity-summed wall functor (translation onto / out of a wall)."""
    want = 1 if parity == "odd" else 0
    out = []
    for j in range(0, m + 1):
        if j % 2 == want:
            out += list(apply_U_wall_single(direction, j, M, m))
    cls = TrivModule if direction == "onto" else GradedModule
    return cls(out)


# ---------------------------------------------------------------------------
# matrices of QuiverElems between graded modules


class QuiverMatrix:
    """A morphism between formal sums of shifted projectives.

    Entry (r, c) is a QuiverElem all of whose paths run from the vertex of
    source summand c to the vertex of target summand r (post-composition
    action).  Rows index the target, columns the source.
    """

    __slots__ = ("m", "source", "target", "entries")

    def __init__(self, m, source: GradedModule, target: GradedModule, entries):
        self.m = m
        self.source = source
        self.target = target
        entries = tuple(tuple(row) for row in entries)
        if len(entries) != len(target) or any(len(row) != len(source) for row in entries):
            raise IncompatibleShapes(
                f"matrix shape {len(entries)}x{len(entries[0]) if entries else 0} "
                f"does not match target {len(target)} x source {len(source)}"
            )
        for r, (bv, _) in enumerate(target):
            for c, (av, _) in enumerate(source):
                for p, _ in entries[r][c].items():
                    if path_source(p) != av or path_target(p) != bv:
                        raise IncompatibleShapes(
                            f"entry ({r},{c}) path {p} is not a morphism {av}P -> {bv}P"
                        )
        self.entries = entries

    @classmethod
    def zero(cls, m, source, target):
        z = QuiverElem.zero(m)
        return cls(m, source, target, [[z] * len(source) for _ in range(len(target))])

    @classmethod
    def identity(cls, m, module):
        z = QuiverElem.zero(m)
        n = len(module)
        ent = [[z] * n for _ in range(n)]
        for r, (v, _) in enumerate(module.summands):
            ent[r][r] = QuiverElem.of_path(m, idem(v))
        return cls(m, module, module, ent)

    def __eq__(self, other):
        return (
            isinstance(other, QuiverMatrix)
            and self.source == other.source
            and self.target == other.target
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.source, self.target, self.entries))

    def __add__(self, other):
        if self.source != other.source or self.target != other.target:
            raise IncompatibleShapes("sum of matrices with different boundaries")
        ent = [
            [self.entries[r][c] + other.entries[r][c] for c in range(len(self.source))]
            for r in range(len(self.target))
        ]
        return QuiverMatrix(self.m, self.source, self.target, ent)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        ent = [[e.scale(c) for e in row] for row in self.entries]
        return QuiverMatrix(self.m, self.source, self.target, ent)

    def compose(self, other: "QuiverMatrix") -> "QuiverMatrix":
        """self after other (matrix product self * other)."""
        if other.target != self.source:
            raise IncompatibleShapes(
                f"cannot compose: inner boundaries differ ({other.target} vs {self.source})"
            )
        z = QuiverElem.zero(self.m)
        ent = []
        for r in range(len(self.target)):
            row = []
            for c in range(len(other.source)):
                acc = z
                for t in range(len(self.source)):
                    e1 = self.entries[r][t]
                    e2 = other.entries[t][c]
                    if e1 and e2:
                        acc = acc + e1 * e2
                row.append(acc)
            ent.append(row)
        return QuiverMatrix(self.m, other.source, self.target, ent)

    def is_zero(self):
        return all(e.is_zero() for row in self.entries for e in row)

    def is_homogeneous(self, d: int) -> bool:
        """All entry paths have length d + s_source - s_target."""
        for r, (_, sr) in enumerate(self.target):
            for c, (_, sc) in enumerate(self.source):
                for p, _ in self.entries[r][c].items():
                    if path_degree(p) != d + sc - sr:
                        return False
        return True

    def __str__(self):
        rows = []
        for row in self.entries:
            rows.append("[" + ", ".join(str(e) for e in row) + "]")
        return f"{self.source} -> {self.target}: [" + "; ".join(rows) + "]"

    __repr__ = __str__


# ---------------------------------------------------------------------------
# the transfer table: U_j on morphisms by honest bimodule tensor algebra

# Middle space aP (x)_{Q_m} P_j, with canonical slot representatives.  Slots
# are ordered by degree; for j == a they are [a (x) e_a, a (x) eps_a] of
# degrees 0 and 2, for |a - j| = 1 the single degree-1 class.


def _slot_rep_paths(a, j, m):
    """Representative tensor pairs (x, y) of the canonical middle classes."""
    if a == j:
        slots = [(idem(a), idem(j)), (idem(a), loop(j))] if j >= 1 else [(idem(a), idem(j))]
    elif j == a + 1:
        slots = [(idem(a), down(a + 1))]
    elif j == a - 1:
        slots = [(idem(a), up(a - 1))]
    else:
        slots = []
    return [s for s in slots if path_valid(s[1], m)]


def _module_basis_right(a, m):
    """Basis paths of the right module aP (paths ending at a)."""
    out = [idem(a)]
    if a >= 1:
        out.append(up(a - 1))
    if a + 1 <= m:
        out.append(down(a + 1))
    if a >= 1:
        out.append(loop(a))
    return out


def _module_basis_left(j, m):
    """Basis paths of the left module P_j (paths starting at j)."""
    out = [idem(j)]
    if j + 1 <= m:
        out.append(up(j))
    if j >= 1:
        out.append(down(j))
    if j >= 1 and j <= m:
        out.append(loop(j))
    return [p for p in out if path_valid(p, m)]


class MiddleSpace:
    """aP (x)_{Q_m} P_j computed as a quotient of the span of basis pairs."""

    def __init__(self, a, j, m):
        self.a, self.j, self.m = a, j, m
        self.right = _module_basis_right(a, m)
        self.left = _module_basis_left(j, m)
        self.pairs = [(x, y) for x in self.right for y in self.left]
        self.index = {pair: k for k, pair in enumerate(self.pairs)}
        width = len(self.pairs)
        rel = RowSpace(width)
        right_set = set(self.right)
        for x in self.right:
            for q in algebra_basis(m):
                for y in self.left:
                    # (x q) (x) y  -  x (x) (q y)
                    vec = [Fraction(0)] * width
                    xq = compose_paths(x, q)
                    if xq is not None:
                        assert xq in right_set, "right action left the module basis"
                        vec[self.index[(xq, y)]] += 1
                    qy = compose_paths(q, y)
                    if qy is not None:
                        vec[self.index[(x, qy)]] -= 1
                    if any(vec):
                        rel.add(vec)
        self.relations = rel
        self.slots = _slot_rep_paths(a, j, m)
        self.slot_degrees = [path_degree(x) + path_degree(y) for x, y in self.slots]
        self._slot_matrix = [self._reduce_pair(pair) for pair in self.slots]

    def _reduce_pair(self, pair):
        vec = [Fraction(0)] * len(self.pairs)
        vec[self.index[pair]] = Fraction(1)
        return self.relations.reduce(vec)

    def coords_in_slots(self, pair_vector):
        """Express a reduced vector in the slot basis; assert exactness."""
        reduced = self.relations.reduce(pair_vector)
        solver = RowSpace(len(self.pairs) + len(self.slots))
        for k, sv in enumerate(self._slot_matrix):
            unit = [Fraction(0)] * len(self.slots)
            unit[k] = Fraction(1)
            solver.add(list(sv) + unit)
        residual = solver.reduce(list(reduced) + [Fraction(0)] * len(self.slots))
        if any(residual[: len(self.pairs)]):
            raise AssertionError("middle-space vector not in the slot span")
        return [-c for c in residual[len(self.pairs):]]


_TRANSFER_CACHE = {}


def transfer_entry_direct(j, a, b, path, m):
    """U_j applied to post-composition by ``path``: aP -> bP, directly.

    Returns a list of (source_slot, target_slot, coefficient):  the entry of
    U_j(f) from the source summand indexed by the slot of aP (x) P_j to the
    target slot of bP (x) P_j, always a multiple of the identity of jP.
    """
    src = MiddleSpace(a, j, m)
    tgt = MiddleSpace(b, j, m)
    out = []
    for si, (x, y) in enumerate(src.slots):
        px = compose_paths(path, x)
        vec = [Fraction(0)] * len(tgt.pairs)
        if px is not None:
            vec[tgt.index[(px, y)]] = Fraction(1)
        coords = tgt.coords_in_slots(vec)
        for ti, c in enumerate(coords):
            if c != 0:
                out.append((si, ti, c))
    return out


def transfer_table(m):
    """Memoized transfer data for all (j, a, b, generator path) at cutoff m."""
    if m in _TRANSFER_CACHE:
        return _TRANSFER_CACHE[m]
    table = {}
    for j in range(1, m + 1):
        for a in range(max(0, j - 1), min(m, j + 1) + 1):
            for b in range(max(0, j - 1), min(m, j + 1) + 1):
                for p in hom_space(a, b, m)[0]:
                    ((path, _),) = tuple(p.items())
                    table[(j, a, b, path)] = transfer_entry_direct(j, a, b, path, m)
    _TRANSFER_CACHE[m] = table
    return table


def _slot_summands(a, s, j, m):
    """Summands of U_j(aP<s>) in slot order, as (vertex, shift) pairs."""
    degs = [path_degree(y) for _, y in _slot_rep_paths(a, j, m)]
    return [(j, s + d - 1) for d in degs]


def apply_U_on_morphism(j: int, F: QuiverMatrix) -> QuiverMatrix:
    """U_j(F) = F (x) id_{B_j}, expressed in the canonical slot bases."""
    m = F.m
    table = transfer_table(m)
    new_src = apply_U(j, F.source, m)
    new_tgt = apply_U(j, F.target, m)
    z = QuiverElem.zero(m)
    ent = [[z] * len(new_src) for _ in range(len(new_tgt))]
    # offsets of each old summand's slot block
    src_off, acc = [], 0
    for a, s in F.source:
        cnt = len(_slot_summands(a, s, j, m))
        src_off.append(acc)
        acc += cnt
    tgt_off, acc = [], 0
    for b, s in F.target:
        cnt = len(_slot_summands(b, s, j, m))
        tgt_off.append(acc)
        acc += cnt
    for r, (b, _) in enumerate(F.target):
        for c, (a, _) in enumerate(F.source):
            elem = F.entries[r][c]
            if not elem:
                continue
            for path, coeff in elem.items():
                for si, ti, cf in table.get((j, a, b, path), ()):
                    rr, cc = tgt_off[r] + ti, src_off[c] + si
                    ent[rr][cc] = ent[rr][cc] + QuiverElem.of_path(m, idem(j), coeff * cf)
    return QuiverMatrix(m, new_src, new_tgt, ent)


def apply_U_parity_on_morphism(parity: str, F: QuiverMatrix) -> QuiverMatrix:
    """U_even or U_odd on morphisms: the block-diagonal sum over indices j."""
    m = F.m
    new_src = apply_U_parity(parity, F.source, m)
    new_tgt = apply_U_parity(parity, F.target, m)
    z = QuiverElem.zero(m)
    ent = [[z] * len(new_src) for _ in range(len(new_tgt))]

    def layout(module):
        # per summand: list of (j, slot_summands) plus running offsets
        offsets, acc = [], 0
        for a, s in module:
            blocks = []
            for j in functor_indices(a, parity, m):
                cnt = len(_slot_summands(a, s, j, m))
                blocks.append((j, acc, cnt))
                acc += cnt
            offsets.append(blocks)
        return offsets

    src_layout = layout(F.source)
    tgt_layout = layout(F.target)
    table = transfer_table(m)
    for r, (b, _) in enumerate(F.target):
        for c, (a, _) in enumerate(F.source):
            elem = F.entries[r][c]
            if not elem:
                continue
            for path, coeff in elem.items():
                for (js, soff, _) in src_layout[c]:
                    for (jt, toff, _) in tgt_layout[r]:
                        if js != jt:
                            continue  # U_j blocks are diagonal in j
                        for si, ti, cf in table.get((js, a, b, path), ()):
                            ent[toff + ti][soff + si] = ent[toff + ti][soff + si] + QuiverElem.of_path(
                                m, idem(js), coeff * cf
                            )
    return QuiverMatrix(m, new_src, new_tgt, ent)


# ---------------------------------------------------------------------------
# elementary bimodule summands P_a (x) bP <s> for the endofunctor module

def letter_summands(letter, m, lo=None):
    """Elementary summands of the bimodule for one functor letter or index."""
    if isinstance(letter, int):
        if not 1 <= letter <= m:
            raise ValueError("bimodule index out of range")
        return [(letter, letter, -1)]
    if letter == "t":
        return [(j, j, -1) for j in range(1, m + 1, 2)]
    if letter == "s":
        return [(j, j, -1) for j in range(2, m + 1, 2)]
    raise ValueError("letter must be 's', 't' or an index")


def tensor_summands(left, right):
    """(P_a (x) bP<s>) (x)_{Q_m} (P_c (x) dP<s'>) as elementary summands."""
    out = []
    for (a, b, s) in left:
        for (c, d, s2) in right:
            if b == c:
                degs = (0, 2) if b >= 1 else (0,)
            elif abs(b - c) == 1:
                degs = (1,)
            else:
                degs = ()
            for e in degs:
                out.append((a, d, s + s2 + e))
    return out


def word_summands(word, m):
    """Elementary summands of B_{x_k} (x) ... (x) B_{x_1} for the word x.

    ``word`` is a sequence of letters or indices read right to left (the
    rightmost acts first); the bimodule tensor runs in application order.
    """
    letters = list(word)
    if not letters:
        raise ValueError("the empty word is the regular bimodule, handled separately")
    acc = letter_summands(letters[-1], m)
    for letter in reversed(letters[:-1]):
        acc = tensor_summands(acc, letter_summands(letter, m))
    return acc


def elementary_hom_poincare(src, tgt) -> LaurentPoly:
    """Graded dimension of bimodule homs between elementary summands."""
    a, b, s = src
    a2, b2, s2 = tgt
    return (hom_poincare(a2, a) * hom_poincare(b, b2)).shift(s2 - s)


def _bimodule_invariants_poincare(a, b, s, m) -> LaurentPoly:
    """Graded dimension of Hom(Q_m, P_a (x) bP<s>): central elements of the summand."""
    left = _module_basis_left(a, m)
    right = _module_basis_right(b, m)
    pairs = [(x, y) for x in left for y in right]
    index = {p: k for k, p in enumerate(pairs)}
    out = LaurentPoly.zero()
    degrees = sorted({path_degree(x) + path_degree(y) for x, y in pairs})
    for degree in degrees:
        unknowns = [p for p in pairs if path_degree(p[0]) + path_degree(p[1]) == degree]
        rows = []
        for q in algebra_basis(m):
            coeffs = {}
            for k, (x, y) in enumerate(unknowns):
                qx = compose_paths(q, x)
                if qx is not None:
                    coeffs.setdefault((qx, y), [Fraction(0)] * len(unknowns))[k] += 1
                yq = compose_paths(y, q)
                if yq is not None:
                    coeffs.setdefault((x, yq), [Fraction(0)] * len(unknowns))[k] -= 1
            rows.extend(v for v in coeffs.values() if any(v))
        space = RowSpace(len(unknowns))
        for r in rows:
            space.add(r)
        dim = len(unknowns) - space.rank
        if dim:
            out = out + LaurentPoly({degree + s: dim})
    return out

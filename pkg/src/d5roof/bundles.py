"""Homogeneous bundles on the roof E = OG(4,10) = G/P(4,5) and on the spinor varieties S+ and S-.

Irreducible bundles are labelled by D5 weights in fundamental coordinates.
Each space has a Levi factor GL(r) x torus, and a weight is the same thing
as a GL(r) highest weight ``mu`` for the dual tautological bundle plus a
twist ``(a, b)``:

    RoofE       (mu1-mu2, mu2-mu3, mu3-mu4, mu4+a, mu4+b)          V^vee,  r = 4
    SpinorPlus  (mu1-mu2, mu2-mu3, mu3-mu4, mu4+mu5+a, mu4-mu5)    U+^vee, r = 5
    SpinorMinus (mu1-mu2, mu2-mu3, mu3-mu4, mu4-mu5, mu4+mu5+b)    U-^vee, r = 5

so O(a,b) = E_{a w4 + b w5} everywhere.  Bundles on S+ / S- keep their
weights when pulled back to E, but stop being irreducible: the pullback of
U+^vee is an extension of V^vee by the line bundle O(1,-1) (and of U-^vee by
O(-1,1)), and Schur functors branch accordingly.

Expressions that are not semisimple on a single space (pullbacks, named
extensions such as Ttilde, trivial bundles V_lambda (x) O) evaluate to a
:class:`Filtered` object, whose graded pieces are what the cohomology and
K-theory code consumes.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .bott import bott
from .gl import check_gl, gl_dim, interlacing, lr_tensor
from .weights import ZERO, levi_restriction, swap_spin, weight, weyl_dim


class Space(Enum):
    ROOF = "RoofE"
    PLUS = "SpinorPlus"
    MINUS = "SpinorMinus"


LEVI_NODES = {
    Space.ROOF: (1, 2, 3),
    Space.PLUS: (1, 2, 3, 5),
    Space.MINUS: (1, 2, 3, 4),
}
TAUT_RANK = {Space.ROOF: 4, Space.PLUS: 5, Space.MINUS: 5}

# line bundle L with U^vee = [L -> V^vee] on E, sub first
PULLBACK_LINE = {Space.PLUS: (1, -1), Space.MINUS: (-1, 1)}


class BundleError(ValueError):
    pass


class SpaceMismatch(BundleError):
    """The expression is not semisimple on one space; use :func:`filtered` instead."""


# ---------------------------------------------------------------------------
# weights <-> (GL weight, twist)


def to_weight(space: Space, mu, twist=(0, 0)) -> tuple:
    mu = check_gl(mu, TAUT_RANK[space])
    a, b = twist
    head = (mu[0] - mu[1], mu[1] - mu[2], mu[2] - mu[3])
    if space is Space.ROOF:
        return head + (mu[3] + a, mu[3] + b)
    if space is Space.PLUS:
        if b:
            raise BundleError(f"S+ carries twists (a,0) only, got {twist}")
        return head + (mu[3] + mu[4] + a, mu[3] - mu[4])
    if a:
        raise BundleError(f"S- carries twists (0,b) only, got {twist}")
    return head + (mu[3] - mu[4], mu[3] + mu[4] + b)


def from_weight(space: Space, lam) -> tuple:
    """Canonical (mu, twist) with last entry of mu equal to 0."""
    l1, l2, l3, l4, l5 = weight(lam)
    check_levi_dominant(space, lam)
    if space is Space.ROOF:
        return (l1 + l2 + l3, l2 + l3, l3, 0), (l4, l5)
    if space is Space.PLUS:
        m4 = l5
        return (l1 + l2 + l3 + m4, l2 + l3 + m4, l3 + m4, m4, 0), (l4 - l5, 0)
    m4 = l4
    return (l1 + l2 + l3 + m4, l2 + l3 + m4, l3 + m4, m4, 0), (0, l5 - l4)


def is_levi_dominant(space: Space, lam) -> bool:
    return all(lam[i - 1] >= 0 for i in LEVI_NODES[space])


def check_levi_dominant(space: Space, lam):
    if not is_levi_dominant(space, lam):
        raise BundleError(f"{tuple(lam)} is not an irreducible weight on {space.value}")


def levi_dim(space: Space, lam) -> int:
    """Rank of the irreducible bundle E_lam on ``space``."""
    mu, _ = from_weight(space, lam)
    return gl_dim(mu)


def irr_dual(space: Space, lam) -> tuple:
    mu, (a, b) = from_weight(space, lam)
    return to_weight(space, tuple(-x for x in reversed(mu)), (-a, -b))


def irr_twist(lam, twist) -> tuple:
    a, b = twist
    return (lam[0], lam[1], lam[2], lam[3] + a, lam[4] + b)


@lru_cache(maxsize=1 << 15)
def irr_tensor(space: Space, lam, nu) -> tuple:
    """E_lam (x) E_nu on one space, as sorted (weight, multiplicity) pairs."""
    m1, t1 = from_weight(space, lam)
    m2, t2 = from_weight(space, nu)
    twist = (t1[0] + t2[0], t1[1] + t2[1])
    out = Counter()
    for mu, m in lr_tensor(m1, m2).items():
        out[to_weight(space, mu, twist)] += m
    return tuple(sorted(out.items()))


@lru_cache(maxsize=1 << 14)
def pullback_irr(space: Space, lam) -> tuple:
    """Graded pieces of the pullback of E_lam from S+/S- to E.

    Returns (sublevel, weight) pairs; the piece carrying L^d sits at
    sublevel -d, so the deepest subbundle comes first.
    """
    if space is Space.ROOF:
        return ((0, tuple(lam)),)
    mu, (a, b) = from_weight(space, lam)
    la, lb = PULLBACK_LINE[space]
    total = sum(mu)
    out = []
    for nu in interlacing(mu):
        d = total - sum(nu)
        out.append((-d, to_weight(Space.ROOF, nu, (a + d * la, b + d * lb))))
    return tuple(sorted(out))


# ---------------------------------------------------------------------------
# multisets of irreducibles


@dataclass(frozen=True)
class IrreducibleMultiset:
    """A direct sum of irreducible bundles on one space."""

    space: Space
    items: tuple  # sorted ((weight, multiplicity), ...)

    @classmethod
    def of(cls, space, counts) -> "IrreducibleMultiset":
        counts = dict(counts)
        for lam, m in counts.items():
            check_levi_dominant(space, lam)
            if m < 0:
                raise BundleError("multiplicities must be non-negative")
        return cls(space, tuple(sorted((tuple(k), v) for k, v in counts.items() if v)))

    def as_dict(self) -> dict:
        return dict(self.items)

    @property
    def rank(self) -> int:
        return sum(m * levi_dim(self.space, lam) for lam, m in self.items)

    def __len__(self):
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    def __add__(self, other):
        if self.space is not other.space:
            raise SpaceMismatch("cannot add multisets on different spaces")
        c = Counter(self.as_dict())
        c.update(other.as_dict())
        return IrreducibleMultiset.of(self.space, c)

    def __str__(self):
        if not self.items:
            return "0"
        return " + ".join(
            (f"{m}*" if m > 1 else "") + f"E{list(lam)}" for lam, m in self.items
        )


# ---------------------------------------------------------------------------
# expressions


class BundleExpr:
    """Base class of expression nodes; all nodes are frozen dataclasses."""

    def __call__(self, a: int, b: int) -> "BundleExpr":
        return Twist(self, a, b)

    def __add__(self, other):
        return Sum(self, other)

    def __mul__(self, other):
        return Tensor(self, other)


ATOMS = ("O", "U+", "U-", "V")
COMPOSITES = ("Ttilde", "Ttilde-", "T4", "Ttilde4", "F")


@dataclass(frozen=True)
class Atom(BundleExpr):
    """O, the tautological bundles U+, U- on the spinor varieties, or V on E."""

    name: str

    def __post_init__(self):
        if self.name not in ATOMS:
            raise BundleError(f"unknown atom {self.name!r}")


@dataclass(frozen=True)
class Composite(BundleExpr):
    """A named non-split extension; its definition lives in :mod:`d5roof.sequences`."""

    name: str

    def __post_init__(self):
        if self.name not in COMPOSITES:
            raise BundleError(f"unknown composite bundle {self.name!r}")


@dataclass(frozen=True)
class Irr(BundleExpr):
    lam: tuple
    space: Space = Space.ROOF

    def __post_init__(self):
        object.__setattr__(self, "lam", weight(self.lam))
        check_levi_dominant(self.space, self.lam)


@dataclass(frozen=True)
class Rep(BundleExpr):
    """The trivial bundle V_lam (x) O for a dominant D5 weight lam."""

    lam: tuple

    def __post_init__(self):
        object.__setattr__(self, "lam", weight(self.lam))
        if any(x < 0 for x in self.lam):
            raise BundleError(f"Rep needs a dominant weight, got {self.lam}")


@dataclass(frozen=True)
class Twist(BundleExpr):
    expr: BundleExpr
    a: int
    b: int


@dataclass(frozen=True)
class Dual(BundleExpr):
    expr: BundleExpr


@dataclass(frozen=True)
class Wedge(BundleExpr):
    k: int
    expr: BundleExpr


@dataclass(frozen=True)
class Sym(BundleExpr):
    k: int
    expr: BundleExpr


@dataclass(frozen=True)
class Sum(BundleExpr):
    left: BundleExpr
    right: BundleExpr


@dataclass(frozen=True)
class Tensor(BundleExpr):
    left: BundleExpr
    right: BundleExpr


@dataclass(frozen=True)
class Extension(BundleExpr):
    """An extension 0 -> sub -> X -> quot -> 0 (only the filtration is recorded)."""

    sub: BundleExpr
    quot: BundleExpr


O = Atom("O")
U_PLUS = Atom("U+")
U_MINUS = Atom("U-")
V = Atom("V")


# ---------------------------------------------------------------------------
# filtered objects


def _pad(level: tuple, n: int) -> tuple:
    return level + (0,) * (n - len(level))


def _add_levels(u: tuple, v: tuple) -> tuple:
    n = max(len(u), len(v))
    return tuple(x + y for x, y in zip(_pad(u, n), _pad(v, n)))


def _merge(pieces) -> tuple:
    """Collapse equal (level, weight) pairs and pad levels to a common length."""
    pieces = list(pieces)
    n = max((len(lv) for lv, _, _ in pieces), default=0)
    acc = Counter()
    for lv, lam, m in pieces:
        acc[(_pad(lv, n), tuple(lam))] += m
    return tuple(sorted((lv, lam, m) for (lv, lam), m in acc.items() if m))


@dataclass(frozen=True)
class Component:
    """One direct summand: ``V_t1 (x) ... (x) V_tk (x) X`` with X filtered.

    ``pieces`` are (level, weight, multiplicity); lower levels are deeper in
    the filtration (subobjects), equal levels are direct summands of the
    associated graded.  ``trivial`` lists the D5 weights of trivial-bundle
    factors, kept symbolic so that cohomology can factor them out.
    """

    trivial: tuple
    pieces: tuple

    @property
    def trivial_dim(self) -> int:
        d = 1
        for t in self.trivial:
            d *= weyl_dim(t)
        return d

    def levels(self) -> list:
        return sorted({lv for lv, _, _ in self.pieces})

    def graded(self) -> list:
        """[(level, {weight: mult}), ...] in increasing level order."""
        out = {}
        for lv, lam, m in self.pieces:
            out.setdefault(lv, Counter())[lam] += m
        return [(lv, dict(out[lv])) for lv in sorted(out)]


@dataclass(frozen=True)
class Filtered:
    """A direct sum of filtered homogeneous bundles on one space.

    ``space`` is None when only trivial weights occur (O and V_lam (x) O),
    which are meaningful on every space.  ``semisimple`` is False once a
    pullback, an extension or a trivial factor is involved.
    """

    space: Space | None
    components: tuple
    semisimple: bool = True

    @property
    def effective_space(self) -> Space:
        return self.space or Space.ROOF

    @property
    def rank(self) -> int:
        sp = self.effective_space
        return sum(
            c.trivial_dim * sum(m * levi_dim(sp, lam) for _, lam, m in c.pieces)
            for c in self.components
        )

    @property
    def is_zero(self) -> bool:
        return not any(c.pieces for c in self.components)

    def graded_multiset(self) -> IrreducibleMultiset:
        """Associated graded, ignoring trivial factors (only valid if there are none)."""
        acc = Counter()
        for c in self.components:
            if c.trivial:
                raise BundleError("graded_multiset: trivial factors present")
            for _, lam, m in c.pieces:
                acc[lam] += m
        return IrreducibleMultiset.of(self.effective_space, acc)

    def describe(self) -> str:
        lines = []
        for c in self.components:
            head = "".join(f"V{list(t)} (x) " for t in c.trivial)
            for lv, d in c.graded():
                ms = IrreducibleMultiset.of(self.effective_space, d)
                lines.append(f"{head}[{','.join(map(str, lv)) or '0'}] {ms}")
        return "\n".join(lines) if lines else "0"


ZERO_OBJECT = Filtered(None, ())


def _line_space(a: int, b: int) -> Space | None:
    if a == 0 and b == 0:
        return None
    if b == 0:
        return Space.PLUS
    if a == 0:
        return Space.MINUS
    return Space.ROOF


def _single(space, lam, semisimple=True) -> Filtered:
    return Filtered(space, (Component((), (((), tuple(lam), 1),)),), semisimple)


def line_bundle(a: int, b: int) -> Filtered:
    return _single(_line_space(a, b), (0, 0, 0, a, b))


def pull_back(f: Filtered, target: Space = Space.ROOF) -> Filtered:
    if f.space is None or f.space is target:
        return f
    if target is not Space.ROOF:
        raise SpaceMismatch(f"cannot pull back from {f.space.value} to {target.value}")
    comps = []
    split = False  # some irreducible pulls back to more than one piece
    for c in f.components:
        pieces = []
        for lv, lam, m in c.pieces:
            pulled = pullback_irr(f.space, lam)
            split |= len(pulled) > 1
            for s, mu in pulled:
                pieces.append((lv + (s,), mu, m))
        comps.append(Component(c.trivial, _merge(pieces)))
    return Filtered(Space.ROOF, tuple(comps), f.semisimple and not split)


def _unify(*fs):
    spaces = {f.space for f in fs if f.space is not None}
    if not spaces:
        return None, fs
    if len(spaces) == 1:
        return spaces.pop(), fs
    return Space.ROOF, tuple(pull_back(f) for f in fs)


def f_sum(f: Filtered, g: Filtered) -> Filtered:
    sp, (f, g) = _unify(f, g)
    return Filtered(sp, f.components + g.components, f.semisimple and g.semisimple)


def f_tensor(f: Filtered, g: Filtered) -> Filtered:
    sp, (f, g) = _unify(f, g)
    comps = []
    for c1 in f.components:
        for c2 in g.components:
            pieces = []
            for l1, lam, m1 in c1.pieces:
                for l2, nu, m2 in c2.pieces:
                    lv = _add_levels(l1, l2)
                    if sp is None:
                        pieces.append((lv, ZERO, m1 * m2))
                        continue
                    for mu, m in irr_tensor(sp, lam, nu):
                        pieces.append((lv, mu, m * m1 * m2))
            comps.append(Component(tuple(sorted(c1.trivial + c2.trivial)), _merge(pieces)))
    return Filtered(sp, tuple(comps), f.semisimple and g.semisimple)


def f_dual(f: Filtered) -> Filtered:
    comps = []
    for c in f.components:
        pieces = []
        for lv, lam, m in c.pieces:
            mu = lam if f.space is None else irr_dual(f.space, lam)
            pieces.append((tuple(-x for x in lv), mu, m))
        trivial = tuple(sorted(swap_spin(t) for t in c.trivial))
        comps.append(Component(trivial, _merge(pieces)))
    return Filtered(f.space, tuple(comps), f.semisimple)


def f_twist(f: Filtered, a: int, b: int) -> Filtered:
    if a == 0 and b == 0:
        return f
    return f_tensor(f, line_bundle(a, b))


def f_extension(sub: Filtered, quot: Filtered) -> Filtered:
    sp, (sub, quot) = _unify(sub, quot)
    pieces = []
    for tag, f in ((0, sub), (1, quot)):
        for c in f.components:
            if c.trivial:
                raise BundleError("extensions involving trivial-bundle factors are not supported")
            pieces.extend(((tag,) + lv, lam, m) for lv, lam, m in c.pieces)
    return Filtered(sp, (Component((), _merge(pieces)),), False)


def _plethysm(f: Filtered, k: int, kind: str) -> Filtered:
    if k < 0:
        raise BundleError("Schur power index must be non-negative")
    if k == 0:
        return _single(None, ZERO)
    pieces = [p for c in f.components for p in c.pieces]
    if len(f.components) != 1 or f.components[0].trivial or len(pieces) != 1 or pieces[0][2] != 1:
        raise BundleError(f"{kind}^{k} is only supported for irreducible bundles")
    lv, lam, _ = pieces[0]
    sp = f.space
    if sp is None:
        mu, twist = (0,), (0, 0)
    else:
        mu, twist = from_weight(sp, lam)
    r = len(mu)
    shift = mu[-1]
    nu = tuple(x - shift for x in mu)
    level = tuple(k * x for x in lv)
    if all(x == 0 for x in nu):
        # a line bundle
        if kind == "wedge" and k > 1:
            return Filtered(sp, (), f.semisimple)
        new_mu = tuple(k * x for x in mu)
    elif nu == (1,) + (0,) * (r - 1):
        if kind == "wedge":
            if k > r:
                return Filtered(sp, (), f.semisimple)
            new = (1,) * k + (0,) * (r - k)
        else:
            new = (k,) + (0,) * (r - 1)
        new_mu = tuple(x + k * shift for x in new)
    elif nu == (1,) * (r - 1) + (0,):
        # dual of the standard representation, up to a determinant
        top = mu[0]
        if kind == "wedge":
            if k > r:
                return Filtered(sp, (), f.semisimple)
            new = (0,) * (r - k) + (-1,) * k
        else:
            new = (0,) * (r - 1) + (-k,)
        new_mu = tuple(x + k * top for x in new)
    else:
        raise BundleError(f"{kind}^{k} of a non-tautological irreducible is not supported")
    kt = (k * twist[0], k * twist[1])
    if sp is None:
        return _single(None, ZERO)
    return Filtered(sp, (Component((), ((level, to_weight(sp, new_mu, kt), 1),)),), f.semisimple)


# tautological bundles: GL weight (0, ..., 0, -1)
_ATOM_WEIGHTS = {
    "U+": (Space.PLUS, to_weight(Space.PLUS, (0, 0, 0, 0, -1))),
    "U-": (Space.MINUS, to_weight(Space.MINUS, (0, 0, 0, 0, -1))),
    "V": (Space.ROOF, to_weight(Space.ROOF, (0, 0, 0, -1))),
}


@lru_cache(maxsize=4096)
def filtered(expr: BundleExpr) -> Filtered:
    """Evaluate an expression to its filtered form on its natural space."""
    if isinstance(expr, Atom):
        if expr.name == "O":
            return _single(None, ZERO)
        sp, lam = _ATOM_WEIGHTS[expr.name]
        return _single(sp, lam)
    if isinstance(expr, Irr):
        return _single(expr.space, expr.lam)
    if isinstance(expr, Rep):
        return Filtered(None, (Component((expr.lam,), (((), ZERO, 1),)),), False)
    if isinstance(expr, Twist):
        return f_twist(filtered(expr.expr), expr.a, expr.b)
    if isinstance(expr, Dual):
        return f_dual(filtered(expr.expr))
    if isinstance(expr, Wedge):
        return _plethysm(filtered(expr.expr), expr.k, "wedge")
    if isinstance(expr, Sym):
        return _plethysm(filtered(expr.expr), expr.k, "sym")
    if isinstance(expr, Sum):
        return f_sum(filtered(expr.left), filtered(expr.right))
    if isinstance(expr, Tensor):
        return f_tensor(filtered(expr.left), filtered(expr.right))
    if isinstance(expr, Extension):
        return f_extension(filtered(expr.sub), filtered(expr.quot))
    if isinstance(expr, Composite):
        from .sequences import composite_definition

        f = filtered(composite_definition(expr.name))
        return Filtered(f.space, f.components, False)
    raise BundleError(f"not a bundle expression: {expr!r}")


# ---------------------------------------------------------------------------
# public operations


def normalize(expr: BundleExpr) -> IrreducibleMultiset:
    """Decompose a semisimple expression into irreducibles on its space."""
    f = filtered(expr)
    if not f.semisimple:
        raise SpaceMismatch(
            "expression is not a direct sum of irreducibles on a single space "
            "(pullback, extension or trivial factor); use filtered()/resolve()"
        )
    return f.graded_multiset()


def as_expr(ms: IrreducibleMultiset) -> BundleExpr:
    """Rebuild an expression from a multiset (used to check idempotence)."""
    out = None
    for lam, m in ms:
        for _ in range(m):
            term = Irr(lam, ms.space)
            out = term if out is None else Sum(out, term)
    if out is None:
        raise BundleError("the zero bundle has no expression")
    return out


def rank(expr) -> int:
    f = expr if isinstance(expr, Filtered) else filtered(expr)
    return f.rank


def euler_char(expr) -> int:
    f = expr if isinstance(expr, Filtered) else filtered(expr)
    total = 0
    for c in f.components:
        chi = 0
        for _, lam, m in c.pieces:
            r = bott(lam)
            if not r.is_zero:
                chi += m * (-1) ** r.degree * r.dim
        total += c.trivial_dim * chi
    return total


_DICTIONARY_TAUT = {Space.ROOF: "V", Space.PLUS: "U+", Space.MINUS: "U-"}


def dictionary(space: Space, kind: str, k: int, twist=(0, 0)) -> IrreducibleMultiset:
    """wedge^k / sym^k of the dual tautological bundle on ``space``, twisted."""
    base = Dual(Atom(_DICTIONARY_TAUT[space]))
    node = {"wedge": Wedge, "sym": Sym}[kind](k, base)
    if twist != (0, 0):
        node = Twist(node, *twist)
    f = filtered(node)
    if f.space not in (space, None):
        raise SpaceMismatch(f"twist {twist} is not defined on {space.value}")
    return IrreducibleMultiset.of(space, f.graded_multiset().as_dict()) if f.components else IrreducibleMultiset(space, ())


# ---------------------------------------------------------------------------
# Grothendieck classes (equivariant, restricted to the Levi of E)


@dataclass(frozen=True)
class KClass:
    """Signed multiset of irreducible weights on E."""

    items: tuple  # sorted ((weight, coefficient), ...), no zeros

    @classmethod
    def of(cls, counts) -> "KClass":
        return cls(tuple(sorted((tuple(k), v) for k, v in dict(counts).items() if v)))

    def as_dict(self) -> dict:
        return dict(self.items)

    def __add__(self, other):
        d = Counter(self.as_dict())
        for k, v in other.items:
            d[k] += v
        return KClass.of(d)

    def __neg__(self):
        return KClass(tuple((k, -v) for k, v in self.items))

    def __sub__(self, other):
        return self + (-other)

    def scale(self, n: int) -> "KClass":
        return KClass.of({k: n * v for k, v in self.items})

    def tensor(self, other) -> "KClass":
        d = Counter()
        for lam, x in self.items:
            for nu, y in other.items:
                for mu, m in irr_tensor(Space.ROOF, lam, nu):
                    d[mu] += x * y * m
        return KClass.of(d)

    def twist(self, a: int, b: int) -> "KClass":
        return KClass.of({irr_twist(k, (a, b)): v for k, v in self.items})

    def dual(self) -> "KClass":
        return KClass.of({irr_dual(Space.ROOF, k): v for k, v in self.items})

    @property
    def rank(self) -> int:
        return sum(v * levi_dim(Space.ROOF, k) for k, v in self.items)

    @property
    def is_zero(self) -> bool:
        return not self.items

    def __str__(self):
        if not self.items:
            return "0"
        parts = []
        for lam, v in self.items:
            sign = "-" if v < 0 else "+"
            mag = abs(v)
            parts.append(f"{sign} {mag if mag > 1 else ''}E{list(lam)}")
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else s


K_ZERO = KClass(())


@lru_cache(maxsize=256)
def rep_class(lam) -> KClass:
    """Class of the trivial bundle V_lam (x) O, i.e. the Levi restriction of V_lam."""
    return KClass.of(levi_restriction(weight(lam), LEVI_NODES[Space.ROOF]))


def kclass(expr) -> KClass:
    f = expr if isinstance(expr, Filtered) else filtered(expr)
    f = pull_back(f)
    total = K_ZERO
    for c in f.components:
        acc = Counter()
        for _, lam, m in c.pieces:
            acc[lam] += m
        cls = KClass.of(acc)
        for t in c.trivial:
            cls = cls.tensor(rep_class(t))
        total = total + cls
    return total

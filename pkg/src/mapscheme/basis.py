"""Algebras given by a basis with computable products.

These are the coefficient algebras of every construction: the basis is
either finite (structure-constant tables, group algebras) or the graded
monomial basis of a polynomial algebra.  Elements are sparse combinations
``basis index -> scalar``.  Distinguished finite subsets of the basis are
always taken from one chain of levels (`level_chain`); for a graded basis
the level p subset is everything of degree <= p, for a finite basis every
level is the whole basis.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .fields import Field

Combo = dict  # basis index -> scalar


class BasisError(ValueError):
    pass


class BasisAlgebra:
    """Abstract basis-indexed algebra with locally finite multiplication."""

    name: str
    field: Field
    commutative: bool = False

    def product(self, i, j) -> Combo:
        raise NotImplementedError

    def unit(self) -> Combo:
        raise NotImplementedError

    def degree(self, i) -> int:
        """Grading; finite algebras are flat at degree 0."""
        return 0

    @property
    def is_finite(self) -> bool:
        raise NotImplementedError

    def finite_basis(self) -> list:
        raise NotImplementedError

    def order_key(self, i):
        raise NotImplementedError

    def label(self, i) -> str:
        raise NotImplementedError

    def combo(self, mapping: Combo) -> Combo:
        """Coerce coefficients and drop zeros."""
        out = {}
        for i, c in mapping.items():
            cc = self.field.of(c)
            if cc != self.field.zero:
                out[i] = cc
        return out

    def __repr__(self):
        return f"{type(self).__name__}({self.name!r})"


def add_combo(A: BasisAlgebra, u: Combo, v: Combo) -> Combo:
    f = A.field
    out = dict(u)
    for i, c in v.items():
        s = f.add(out.get(i, f.zero), c)
        if s == f.zero:
            out.pop(i, None)
        else:
            out[i] = s
    return out


def scale_combo(A: BasisAlgebra, u: Combo, c) -> Combo:
    f = A.field
    cc = f.of(c)
    if cc == f.zero:
        return {}
    return {i: f.mul(v, cc) for i, v in u.items()}


def expand_product(A: BasisAlgebra, u: Combo, v: Combo) -> Combo:
    """Bilinear extension of the basiswise product."""
    f = A.field
    out: Combo = {}
    for i, ci in u.items():
        for j, cj in v.items():
            cij = f.mul(ci, cj)
            for k, gk in A.product(i, j).items():
                s = f.add(out.get(k, f.zero), f.mul(cij, gk))
                if s == f.zero:
                    out.pop(k, None)
                else:
                    out[k] = s
    return out


def format_combo(A: BasisAlgebra, u: Combo) -> str:
    if not u:
        return "0"
    items = sorted(u.items(), key=lambda kv: A.order_key(kv[0]))
    parts = []
    for i, c in items:
        lbl = A.label(i)
        parts.append(lbl if c == A.field.one else f"{A.field.format(c)}*{lbl}")
    return " + ".join(parts)


class BasisHopfAlgebra(BasisAlgebra):
    """Basis algebra with basiswise comultiplication, counit and antipode."""

    def comul(self, i) -> dict:  # (idx, idx) -> scalar
        raise NotImplementedError

    def counit(self, i):
        raise NotImplementedError

    def antipode(self, i) -> Combo:
        raise NotImplementedError


# ---------------------------------------------------------------------------
# concrete algebras
# ---------------------------------------------------------------------------


class StructureConstantAlgebra(BasisAlgebra):
    """Finite-dimensional algebra from a multiplication table.

    `table[(i, j)]` is the combination expressing ``e_i * e_j``; missing
    entries mean zero.  Indices run 0..dim-1 with labels e1..edim unless
    custom labels are supplied.
    """

    def __init__(self, name, field, dim, table, unit, labels=None):
        self.name = name
        self.field = field
        self.dim = dim
        self._table = {}
        for (i, j), combo in table.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise BasisError(f"table index ({i},{j}) out of range")
            clean = self.combo(combo)
            if clean:
                self._table[(i, j)] = clean
        self._unit = self.combo(unit)
        self.labels = tuple(labels) if labels else tuple(f"e{i+1}" for i in range(dim))
        if len(self.labels) != dim:
            raise BasisError("label count != dim")
        self.commutative = all(
            self._table.get((i, j), {}) == self._table.get((j, i), {})
            for i in range(dim)
            for j in range(dim)
        )

    def product(self, i, j):
        return self._table.get((i, j), {})

    def unit(self):
        return self._unit

    @property
    def is_finite(self):
        return True

    def finite_basis(self):
        return list(range(self.dim))

    def order_key(self, i):
        return i

    def label(self, i):
        return self.labels[i]


def split_field_algebra(field: Field, n: int, name: str | None = None) -> StructureConstantAlgebra:
    """K^n with componentwise product (n orthogonal idempotents)."""
    table = {(i, i): {i: field.one} for i in range(n)}
    unit = {i: field.one for i in range(n)}
    return StructureConstantAlgebra(name or f"K{n}", field, n, table, unit)


class PolynomialBasisAlgebra(BasisAlgebra):
    """Commutative polynomials in m variables; basis = exponent tuples."""

    commutative = True

    def __init__(self, name, field, variables):
        self.name = name
        self.field = field
        self.variables = tuple(variables)
        if not self.variables:
            raise BasisError("need at least one variable")
        self.m = len(self.variables)

    def product(self, i, j):
        return {tuple(a + b for a, b in zip(i, j)): self.field.one}

    def unit(self):
        return {(0,) * self.m: self.field.one}

    def degree(self, i):
        return sum(i)

    @property
    def is_finite(self):
        return False

    def finite_basis(self):
        raise BasisError(f"{self.name} has an infinite basis")

    def order_key(self, i):
        return (sum(i), tuple(-e for e in i))

    def label(self, i):
        if not any(i):
            return "1"
        parts = []
        for v, e in zip(self.variables, i):
            if e == 1:
                parts.append(v)
            elif e > 1:
                parts.append(f"{v}^{e}")
        return "*".join(parts)

    def monomials_of_degree_at_most(self, p: int) -> list:
        out = [
            e
            for e in itertools.product(range(p + 1), repeat=self.m)
            if sum(e) <= p
        ]
        out.sort(key=self.order_key)
        return out


@dataclass(frozen=True)
class FiniteGroup:
    name: str
    elements: tuple  # labels, identity first
    table: dict  # (label, label) -> label
    inverse: dict  # label -> label

    @property
    def identity(self):
        return self.elements[0]

    def is_abelian(self) -> bool:
        return all(
            self.table[(a, b)] == self.table[(b, a)]
            for a in self.elements
            for b in self.elements
        )


def cyclic_group(n: int) -> FiniteGroup:
    labels = tuple(f"u^{i}" for i in range(n))
    table = {
        (labels[i], labels[j]): labels[(i + j) % n]
        for i in range(n)
        for j in range(n)
    }
    inverse = {labels[i]: labels[(-i) % n] for i in range(n)}
    return FiniteGroup(f"Z/{n}", labels, table, inverse)


def symmetric_group_3() -> FiniteGroup:
    perms = {
        "e": (0, 1, 2),
        "r": (1, 2, 0),
        "r2": (2, 0, 1),
        "t": (1, 0, 2),
        "rt": (2, 1, 0),
        "r2t": (0, 2, 1),
    }
    by_perm = {p: lbl for lbl, p in perms.items()}
    labels = ("e", "r", "r2", "t", "rt", "r2t")

    def compose(f, g):
        return tuple(f[g[i]] for i in range(3))

    table = {
        (a, b): by_perm[compose(perms[a], perms[b])] for a in labels for b in labels
    }
    inverse = {}
    for a in labels:
        for b in labels:
            if table[(a, b)] == "e":
                inverse[a] = b
    return FiniteGroup("S3", labels, table, inverse)


class GroupAlgebra(BasisHopfAlgebra):
    """K[G] for a finite group, with its group-like Hopf structure."""

    def __init__(self, name, field, group: FiniteGroup):
        self.name = name
        self.field = field
        self.group = group
        self.commutative = group.is_abelian()
        self._order = {g: i for i, g in enumerate(group.elements)}

    def product(self, i, j):
        return {self.group.table[(i, j)]: self.field.one}

    def unit(self):
        return {self.group.identity: self.field.one}

    @property
    def is_finite(self):
        return True

    def finite_basis(self):
        return list(self.group.elements)

    def order_key(self, i):
        return self._order[i]

    def label(self, i):
        return i

    def comul(self, i):
        return {(i, i): self.field.one}

    def counit(self, i):
        return self.field.one

    def antipode(self, i):
        return {self.group.inverse[i]: self.field.one}


class AdditiveHopfPolynomialAlgebra(PolynomialBasisAlgebra, BasisHopfAlgebra):
    """K[x] as the coordinate Hopf algebra of the additive group: the
    variable is primitive, so comultiplication is binomial expansion."""

    def __init__(self, name, field, variable="x"):
        super().__init__(name, field, (variable,))

    def comul(self, i):
        (n,) = i
        f = self.field
        out = {}
        for k in range(n + 1):
            c = f.of(comb(n, k))
            if c != f.zero:
                out[((k,), (n - k,))] = c
        return out

    def counit(self, i):
        return self.field.one if sum(i) == 0 else self.field.zero

    def antipode(self, i):
        (n,) = i
        c = self.field.of((-1) ** n)
        return {} if c == self.field.zero else {i: c}


class TensorBasisAlgebra(BasisAlgebra):
    """Tensor product of two finite basis algebras; basis = index pairs."""

    def __init__(self, A: BasisAlgebra, B: BasisAlgebra, name=None):
        if not (A.is_finite and B.is_finite):
            raise BasisError("tensor basis algebra needs finite factors")
        if A.field != B.field:
            raise BasisError("tensor factors over different fields")
        self.name = name or f"({A.name} (x) {B.name})"
        self.field = A.field
        self.A = A
        self.B = B
        self.commutative = A.commutative and B.commutative

    def product(self, i, j):
        f = self.field
        out = {}
        for a, ca in self.A.product(i[0], j[0]).items():
            for b, cb in self.B.product(i[1], j[1]).items():
                c = f.mul(ca, cb)
                if c != f.zero:
                    out[(a, b)] = f.add(out.get((a, b), f.zero), c)
        return {k: v for k, v in out.items() if v != f.zero}

    def unit(self):
        f = self.field
        out = {}
        for a, ca in self.A.unit().items():
            for b, cb in self.B.unit().items():
                out[(a, b)] = f.mul(ca, cb)
        return out

    @property
    def is_finite(self):
        return True

    def finite_basis(self):
        return [
            (a, b) for a in self.A.finite_basis() for b in self.B.finite_basis()
        ]

    def order_key(self, i):
        return (self.A.order_key(i[0]), self.B.order_key(i[1]))

    def label(self, i):
        return f"{self.A.label(i[0])}|{self.B.label(i[1])}"


class BasisMap:
    """An algebra map between basis algebras, given basiswise.

    ``images(i)`` must return a finite combination in the target basis.
    For polynomial sources the map is determined by the variable images and
    extended multiplicatively (cached).
    """

    def __init__(self, source: BasisAlgebra, target: BasisAlgebra, images):
        self.source = source
        self.target = target
        self._images = images
        self._cache: dict = {}

    def __call__(self, i) -> Combo:
        if i not in self._cache:
            self._cache[i] = self.target.combo(self._images(i))
        return self._cache[i]

    @classmethod
    def identity(cls, A: BasisAlgebra) -> "BasisMap":
        return cls(A, A, lambda i: {i: A.field.one})

    @classmethod
    def from_dict(cls, source, target, table: dict) -> "BasisMap":
        return cls(source, target, lambda i: table.get(i, {}))

    @classmethod
    def from_variable_images(
        cls, source: PolynomialBasisAlgebra, target: BasisAlgebra, var_images: dict
    ) -> "BasisMap":
        """Multiplicative extension of variable -> combination images."""
        f = target.field

        def images(exps):
            out = target.unit()
            for v, e in zip(source.variables, exps):
                img = target.combo(var_images[v])
                for _ in range(e):
                    out = expand_product(target, out, img)
            return out

        return cls(source, target, images)


# ---------------------------------------------------------------------------
# level chains
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LevelChain:
    """Nested finite basis subsets L_0 <= L_1 <= ... exhausting the basis."""

    owner: BasisAlgebra

    def __call__(self, p: int) -> tuple:
        A = self.owner
        if A.is_finite:
            basis = sorted(A.finite_basis(), key=A.order_key)
            return tuple(basis)
        if isinstance(A, PolynomialBasisAlgebra):
            return tuple(A.monomials_of_degree_at_most(p))
        raise BasisError(f"no level chain for ungraded infinite basis {A.name}")


def level_chain(A: BasisAlgebra) -> LevelChain:
    if not A.is_finite and not isinstance(A, PolynomialBasisAlgebra):
        raise BasisError(f"unsupported coefficient algebra {A.name}")
    return LevelChain(A)


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------


@dataclass
class StructureReport:
    ok: bool
    failures: list

    def __bool__(self):
        return self.ok


def _bounded_basis(A: BasisAlgebra, bound: int) -> list:
    if A.is_finite:
        return sorted(A.finite_basis(), key=A.order_key)[:bound]
    return list(level_chain(A)(bound))


def validate_structure(A: BasisAlgebra, bound: int = 8) -> StructureReport:
    """Check associativity and unit laws on all basis pairs/triples up to
    the bound; for Hopf basis algebras also the coalgebra and antipode laws."""
    f = A.field
    basis = _bounded_basis(A, bound)
    failures = []
    one = A.unit()
    for i in basis:
        ei = {i: f.one}
        if expand_product(A, one, ei) != ei:
            failures.append(("left-unit", i))
        if expand_product(A, ei, one) != ei:
            failures.append(("right-unit", i))
    for i in basis:
        for j in basis:
            ij = A.product(i, j)
            for k in basis:
                left = expand_product(A, ij, {k: f.one})
                right = expand_product(A, {i: f.one}, A.product(j, k))
                if left != right:
                    failures.append(("associativity", (i, j, k)))
    if isinstance(A, BasisHopfAlgebra):
        failures.extend(_validate_hopf(A, basis))
    return StructureReport(not failures, failures)


def _pair_add(f, out, key, c):
    s = f.add(out.get(key, f.zero), c)
    if s == f.zero:
        out.pop(key, None)
    else:
        out[key] = s


def _validate_hopf(A: BasisHopfAlgebra, basis) -> list:
    f = A.field
    failures = []
    for b in basis:
        delta = A.comul(b)
        # coassociativity over triple index tuples
        left: dict = {}
        right: dict = {}
        for (i, j), c in delta.items():
            for (i1, i2), c2 in A.comul(i).items():
                _pair_add(f, left, (i1, i2, j), f.mul(c, c2))
            for (j1, j2), c2 in A.comul(j).items():
                _pair_add(f, right, (i, j1, j2), f.mul(c, c2))
        if left != right:
            failures.append(("coassociativity", b))
        # counit both sides
        lcu: Combo = {}
        rcu: Combo = {}
        for (i, j), c in delta.items():
            _pair_add(f, lcu, j, f.mul(c, A.counit(i)))
            _pair_add(f, rcu, i, f.mul(c, A.counit(j)))
        if lcu != {b: f.one} or rcu != {b: f.one}:
            failures.append(("counit", b))
        # antipode convolution
        conv_l: Combo = {}
        conv_r: Combo = {}
        for (i, j), c in delta.items():
            for k, c2 in expand_product(A, A.antipode(i), {j: f.one}).items():
                _pair_add(f, conv_l, k, f.mul(c, c2))
            for k, c2 in expand_product(A, {i: f.one}, A.antipode(j)).items():
                _pair_add(f, conv_r, k, f.mul(c, c2))
        target = scale_combo(A, A.unit(), A.counit(b))
        if conv_l != target or conv_r != target:
            failures.append(("antipode", b))
    return failures

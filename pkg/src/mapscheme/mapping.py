"""The universal algebra of a mapping problem, and its tower.

Given a presented algebra B and a coefficient algebra C with a chosen
finite basis subset per generator, there is an algebra A with one symbol
per (generator, basis element) pair and a structural map sending each
generator b to the generic combination ``sum_c c (x) x[b,c]``.  Forcing
that assignment to kill every relation of B — coefficient by coefficient
over the *full* basis of C — yields exactly the relations of A.  Scalar
points of A then match algebra maps from B into C with coefficients
supported in the chosen subsets, which is what `enumerate_points` /
`enumerate_morphisms` verify against each other.

Running the construction along the level chain of C gives a tower whose
connecting maps kill the symbols that fall outside the lower level.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .basis import (
    BasisAlgebra,
    BasisMap,
    Combo,
    add_combo,
    expand_product,
    level_chain,
    scale_combo,
)
from .fields import Field
from .freealg import (
    AlgebraPresentation,
    FreeAlgebra,
    GeneratorImageMap,
    NCPolynomial,
    commutativize_presentation,
    substitute,
)
from .groebner import Verdict, combine_verdicts, decide_zero
from .pointsearch import solve
from .tower import ProMorphism, Tower, TowerPoint


class MappingError(ValueError):
    pass


class BasisTensorPoly:
    """Element of (coefficient algebra) (x) (free algebra): a finite sum of
    basis elements, each tagged with a noncommutative polynomial."""

    __slots__ = ("C", "alg", "comps")

    def __init__(self, C: BasisAlgebra, alg: FreeAlgebra, comps: dict):
        self.C = C
        self.alg = alg
        self.comps = {c: p for c, p in comps.items() if not p.is_zero()}

    @classmethod
    def unit(cls, C: BasisAlgebra, alg: FreeAlgebra) -> "BasisTensorPoly":
        one = alg.one()
        return cls(C, alg, {c: one.scale(v) for c, v in C.unit().items()})

    def is_zero(self) -> bool:
        return not self.comps

    def __add__(self, other: "BasisTensorPoly") -> "BasisTensorPoly":
        comps = dict(self.comps)
        for c, p in other.comps.items():
            comps[c] = comps[c] + p if c in comps else p
        return BasisTensorPoly(self.C, self.alg, comps)

    def __mul__(self, other: "BasisTensorPoly") -> "BasisTensorPoly":
        comps: dict = {}
        for c1, p1 in self.comps.items():
            for c2, p2 in other.comps.items():
                pq = p1 * p2
                if pq.is_zero():
                    continue
                for c3, gamma in self.C.product(c1, c2).items():
                    piece = pq.scale(gamma)
                    comps[c3] = comps[c3] + piece if c3 in comps else piece
        return BasisTensorPoly(self.C, self.alg, comps)

    def scale(self, k) -> "BasisTensorPoly":
        return BasisTensorPoly(
            self.C, self.alg, {c: p.scale(k) for c, p in self.comps.items()}
        )

    def __eq__(self, other):
        return (
            isinstance(other, BasisTensorPoly)
            and self.C is other.C
            and self.alg == other.alg
            and self.comps == other.comps
        )

    def __repr__(self):
        inner = ", ".join(
            f"{self.C.label(c)} (x) {p!r}"
            for c, p in sorted(self.comps.items(), key=lambda kv: self.C.order_key(kv[0]))
        )
        return f"BasisTensorPoly({inner})"


def generator_name(b: str, C: BasisAlgebra, c) -> str:
    return f"{b}[{C.label(c)}]"


@dataclass(frozen=True)
class MappingProblem:
    """A presented algebra, a coefficient algebra, and the distinguished
    basis subset attached to each generator."""

    B: AlgebraPresentation
    C: BasisAlgebra
    delta: dict

    def __post_init__(self):
        if self.B.field != self.C.field:
            raise MappingError("presentation and coefficients over different fields")
        for b in self.B.gens:
            if not self.delta.get(b):
                raise MappingError(f"empty basis subset for generator {b!r}")


@dataclass
class MappingAlgebra:
    """The universal algebra together with its structural family map."""

    problem: MappingProblem
    presentation: AlgebraPresentation
    h: dict  # generator of B -> BasisTensorPoly
    gen_info: list  # (b, basis index, generator name) in canonical order


def build_mapping_algebra(
    problem: MappingProblem, commutative: bool = False, name: str | None = None
) -> MappingAlgebra:
    B, C = problem.B, problem.C
    gen_info = []
    for b in B.gens:
        for c in sorted(problem.delta[b], key=C.order_key):
            gen_info.append((b, c, generator_name(b, C, c)))
    names = [n for (_, _, n) in gen_info]
    alg = FreeAlgebra(B.field, names)
    h = {}
    for b in B.gens:
        comps = {
            c: alg.gen(n) for (bb, c, n) in gen_info if bb == b
        }
        h[b] = BasisTensorPoly(C, alg, comps)
    one = BasisTensorPoly.unit(C, alg)
    relations: list[NCPolynomial] = []
    seen = set()
    for r in B.relations:
        expansion = substitute(r, h, one)
        for c in sorted(expansion.comps, key=C.order_key):
            p = expansion.comps[c].monic()
            if p not in seen:
                seen.add(p)
                relations.append(p)
    pres = AlgebraPresentation(
        name or f"A({B.name},{C.name})", B.field, names, relations
    )
    if commutative:
        pres = commutativize_presentation(pres)
    return MappingAlgebra(problem, pres, h, gen_info)


class MappingTower:
    """Levelwise mapping algebras along the coefficient algebra's chain."""

    def __init__(
        self,
        B: AlgebraPresentation,
        C: BasisAlgebra,
        p_max: int,
        commutative: bool = False,
        name: str | None = None,
    ):
        self.B = B
        self.C = C
        self.p_max = p_max
        self.commutative = commutative
        self.chain = level_chain(C)
        self.builds = {}
        for p in range(p_max + 1):
            self.builds[p] = self._build_level(p, self.chain(p))
        self.name = name or f"A({B.name},{C.name})"
        levels = {p: self.builds[p].presentation for p in range(p_max + 1)}
        self.tower = Tower(self.name, levels, self._connect)

    def _build_level(self, p: int, subset) -> MappingAlgebra:
        delta = {b: subset for b in self.B.gens}
        return build_mapping_algebra(
            MappingProblem(self.B, self.C, delta),
            commutative=self.commutative,
            name=f"A({self.B.name},{self.C.name})_{p}",
        )

    def _connect(self, lo: int, hi: int) -> GeneratorImageMap:
        low_level = set(self.chain(lo))
        target = self.builds[lo].presentation
        images = {}
        for b, c, n in self.builds[hi].gen_info:
            images[n] = target.gen(n) if c in low_level else target.algebra.zero()
        return GeneratorImageMap(self.builds[hi].presentation, target, images)

    def level(self, p: int) -> AlgebraPresentation:
        return self.tower.level(p)

    def h(self, p: int) -> dict:
        return self.builds[p].h

    def gen_info(self, p: int) -> list:
        return self.builds[p].gen_info

    def commutativized(self) -> "MappingTower":
        return MappingTower(
            self.B, self.C, self.p_max, commutative=True, name=self.name + "_c"
        )

    def __repr__(self):
        return f"MappingTower({self.name!r}, p_max={self.p_max})"


def build_mapping_tower(
    B: AlgebraPresentation, C: BasisAlgebra, p_max: int, commutative: bool = False
) -> MappingTower:
    return MappingTower(B, C, p_max, commutative=commutative)


def commutativize(obj):
    """Add all generator commutators, levelwise for towers."""
    if isinstance(obj, AlgebraPresentation):
        return commutativize_presentation(obj)
    if isinstance(obj, MappingTower):
        return obj.commutativized()
    if isinstance(obj, Tower):
        levels = {
            p: commutativize_presentation(obj.level(p))
            for p in obj.available_levels()
        }

        def connector(lo, hi):
            base = obj.connecting(lo, hi)
            return GeneratorImageMap(
                levels[hi],
                levels[lo],
                {g: levels[lo].poly(img.terms) for g, img in base.images.items()},
            )

        return Tower(obj.name + "_c", levels, connector)
    raise MappingError(f"cannot commutativize {obj!r}")


def family_compatibility(mt: MappingTower) -> Verdict:
    """Exact check that pushing the structural family down the tower
    reproduces the lower family maps."""
    levels = mt.tower.available_levels()
    for a, lo in enumerate(levels):
        for hi in levels[a + 1 :]:
            conn = mt.tower.connecting(lo, hi)
            for b in mt.B.gens:
                pushed = {}
                for c, p in mt.h(hi)[b].comps.items():
                    q = conn.apply(p)
                    if not q.is_zero():
                        pushed[c] = q
                if pushed != mt.h(lo)[b].comps:
                    return Verdict.REFUTED
    return Verdict.VERIFIED


# ---------------------------------------------------------------------------
# the universal property: factoring families, functoriality
# ---------------------------------------------------------------------------


def minimal_level(mt: MappingTower, supports) -> int:
    """Smallest built level whose basis subset contains every index in
    `supports`."""
    for p in mt.tower.available_levels():
        allowed = set(mt.chain(p))
        if all(c in allowed for c in supports):
            return p
    raise MappingError("family support exceeds every built level")


def factor_family(
    mt: MappingTower,
    e: dict,
    E: AlgebraPresentation,
    at_level: int | None = None,
    name: str = "",
) -> ProMorphism:
    """The unique map out of the tower induced by a family ``e``.

    `e` maps each generator of B to ``{basis index -> polynomial over E}``.
    The member at level p sends the symbol for (b, c) to the coefficient of
    c in e(b); by construction the family factors exactly through the
    structural map at that level.
    """
    supports = {c for comps in e.values() for c in comps}
    p = minimal_level(mt, supports) if at_level is None else at_level
    allowed = set(mt.chain(p))
    if not supports <= allowed:
        raise MappingError(f"family support not contained in level {p}")
    images = {}
    zero = E.algebra.zero()
    for b, c, n in mt.gen_info(p):
        images[n] = e[b].get(c, zero)
    member = GeneratorImageMap(mt.level(p), E, images)
    return ProMorphism(mt.tower, Tower.single(E), [(p, 0, member)], name=name)


def verify_family(
    mt: MappingTower, e: dict, E: AlgebraPresentation, degree_bound: int = 8
) -> Verdict:
    """Check that `e` really is an algebra map B -> C (x) E: every relation
    of B must expand to coefficient polynomials lying in E's ideal."""
    alg = E.algebra
    wrapped = {
        b: BasisTensorPoly(mt.C, alg, comps) for b, comps in e.items()
    }
    one = BasisTensorPoly.unit(mt.C, alg)
    verdicts = []
    for r in mt.B.relations:
        expansion = substitute(r, wrapped, one)
        for c, p in expansion.comps.items():
            v, _ = decide_zero(p, E, degree_bound)
            if v is Verdict.REFUTED:
                return Verdict.REFUTED
            verdicts.append(v)
    return combine_verdicts(verdicts)


def induced_promorphism(
    g: GeneratorImageMap,
    f: BasisMap,
    src: MappingTower,
    dst: MappingTower,
    target_levels=None,
    degree_bound: int = 8,
) -> tuple[ProMorphism, Verdict]:
    """Functorial map between mapping towers, contravariant in the
    coefficient side: push the structural family of `dst` through `g`,
    rewrite its coefficients along `f`, and extract symbol images.

    Returns the represented morphism together with the verdict of the
    relation-preservation check for `g` (inconclusive checks are allowed
    and simply propagate)."""
    if g.source != src.B or g.target != dst.B:
        raise MappingError("generator map endpoints do not match the towers")
    if f.source is not dst.C or f.target is not src.C:
        raise MappingError("coefficient map endpoints do not match the towers")
    from .groebner import verify_morphism

    g_verdict = (
        Verdict.VERIFIED
        if g.verified_to_degree is not None
        else verify_morphism(g, degree_bound)
    )
    if g_verdict is Verdict.REFUTED:
        raise MappingError("generator map does not respect the relations")
    if target_levels is None:
        target_levels = dst.tower.available_levels()
    members = []
    for p2 in target_levels:
        h2 = dst.h(p2)
        alg2 = dst.builds[p2].presentation.algebra
        one2 = BasisTensorPoly.unit(dst.C, alg2)
        e = {}
        for b in src.B.gens:
            pushed = substitute(g.images[b], h2, one2)
            comps: dict = {}
            for c2, p in pushed.comps.items():
                for c, gamma in f(c2).items():
                    piece = p.scale(gamma)
                    comps[c] = comps[c] + piece if c in comps else piece
            e[b] = {c: p for c, p in comps.items() if not p.is_zero()}
        supports = {c for comps in e.values() for c in comps}
        p1 = minimal_level(src, supports)
        allowed = set(src.chain(p1))
        images = {}
        zero = dst.level(p2).algebra.zero()
        for b, c, n in src.gen_info(p1):
            images[n] = e[b].get(c, zero) if c in allowed else zero
        members.append((p1, p2, GeneratorImageMap(src.level(p1), dst.level(p2), images)))
    return (
        ProMorphism(src.tower, dst.tower, members, name="induced"),
        g_verdict,
    )


# ---------------------------------------------------------------------------
# points and morphisms over finite fields
# ---------------------------------------------------------------------------


def enumerate_points(
    pres: AlgebraPresentation,
    field: Field,
    limit: int | None = None,
    workers: int = 1,
) -> list[dict]:
    """All scalar points of the presented algebra over F_q, as assignments
    in deterministic (lexicographic) order."""
    if not field.is_prime_field:
        raise MappingError("point enumeration needs a prime field")
    if pres.field != field:
        if pres.field.is_prime_field:
            raise MappingError(
                f"presentation over {pres.field}, points requested over {field}"
            )
        # rational presentation: reduce coefficients mod p
        alg = FreeAlgebra(field, pres.gens)
        rels = [alg.poly(r.terms) for r in pres.relations]
        pres = AlgebraPresentation(pres.name, field, pres.gens, rels, pres.commutative)
    tuples = solve(pres.gens, list(pres.relations), field, limit=limit, workers=workers)
    return [dict(zip(pres.gens, t)) for t in tuples]


def _relation_ready_index(rel: NCPolynomial, gen_pos: dict) -> int:
    top = -1
    for w in rel.terms:
        for g in w:
            top = max(top, gen_pos[g])
    return top


def _eval_relation_in_C(C: BasisAlgebra, rel: NCPolynomial, images: dict) -> Combo:
    total: Combo = {}
    for w, coeff in rel.terms.items():
        val = C.unit()
        for g in w:
            val = expand_product(C, val, images[g])
        total = add_combo(C, total, scale_combo(C, val, coeff))
    return total


def enumerate_morphisms(
    B: AlgebraPresentation,
    C: BasisAlgebra,
    L,
    field: Field,
    limit: int | None = None,
) -> list[dict]:
    """Brute-force search for algebra maps B -> C whose generator images
    are combinations over the subset L; the independent oracle against
    `enumerate_points` of the constructed algebra.

    Backtracks generator by generator, checking each relation as soon as
    all its generators have images.
    """
    if not field.is_prime_field:
        raise MappingError("morphism enumeration needs a prime field")
    q = field.p
    L = tuple(sorted(L, key=C.order_key))
    gens = B.gens
    from .pointsearch import check_guard

    check_guard(q, len(L) * len(gens), limit)
    if C.field != field:
        raise MappingError("coefficient algebra must live over the search field")
    gen_pos = {g: i for i, g in enumerate(gens)}
    by_depth: list[list[NCPolynomial]] = [[] for _ in gens]
    constant_bad = False
    for r in B.relations:
        d = _relation_ready_index(r, gen_pos)
        if d < 0:
            val = sum(field.of(c) for c in r.terms.values()) % q
            constant_bad = constant_bad or val != 0
        else:
            by_depth[d].append(r)
    if constant_bad:
        return []
    out: list[dict] = []
    images: dict = {}

    def rec(d: int):
        if d == len(gens):
            out.append({g: dict(images[g]) for g in gens})
            return
        g = gens[d]
        for values in itertools.product(range(q), repeat=len(L)):
            combo = {c: v for c, v in zip(L, values) if v != 0}
            images[g] = combo
            ok = True
            for r in by_depth[d]:
                if _eval_relation_in_C(C, r, images):
                    ok = False
                    break
            if ok:
                rec(d + 1)
        images.pop(g, None)

    if not gens:
        return [{}]
    rec(0)
    return out


def point_from_morphism(mt: MappingTower, e: dict) -> TowerPoint:
    """A morphism with supports inside some level becomes a scalar point of
    that level's algebra (the smallest such level)."""
    supports = {c for combo in e.values() for c in combo}
    p = minimal_level(mt, supports)
    field = mt.B.field
    assignment = {}
    for b, c, n in mt.gen_info(p):
        assignment[n] = e.get(b, {}).get(c, field.zero)
    return TowerPoint(mt.tower, p, assignment)


def morphism_from_point(mt: MappingTower, point: TowerPoint) -> dict:
    """Read the generator images off a tower point's coordinates."""
    field = mt.B.field
    out: dict = {b: {} for b in mt.B.gens}
    for b, c, n in mt.gen_info(point.level):
        v = point.assignment[n]
        if v != field.zero:
            out[b][c] = v
    return out


# ---------------------------------------------------------------------------
# product and exponential transports
# ---------------------------------------------------------------------------


@dataclass
class TransportReport:
    description: str
    left_count: int
    right_count: int
    oracle_count: int | None = None

    @property
    def equal(self) -> bool:
        counts = [self.left_count, self.right_count]
        if self.oracle_count is not None:
            counts.append(self.oracle_count)
        return len(set(counts)) == 1


def transport_product(
    B1: AlgebraPresentation,
    B2: AlgebraPresentation,
    C: BasisAlgebra,
    field: Field,
    limit: int | None = None,
) -> TransportReport:
    """Point count of the commutativized construction on a tensor of two
    presentations versus the product of the separate counts."""
    from .freealg import tensor_presentation

    if not C.is_finite:
        raise MappingError("transport needs a finite coefficient algebra")
    full = tuple(sorted(C.finite_basis(), key=C.order_key))
    B12 = tensor_presentation(B1, B2)
    lhs = build_mapping_algebra(
        MappingProblem(B12, C, {b: full for b in B12.gens}), commutative=True
    )
    n_l = len(enumerate_points(lhs.presentation, field, limit=limit))
    sides = []
    for Bi in (B1, B2):
        m = build_mapping_algebra(
            MappingProblem(Bi, C, {b: full for b in Bi.gens}), commutative=True
        )
        sides.append(len(enumerate_points(m.presentation, field, limit=limit)))
    return TransportReport(
        "product law", n_l, sides[0] * sides[1]
    )


def transport_exponential(
    B: AlgebraPresentation,
    C1: BasisAlgebra,
    C2: BasisAlgebra,
    field: Field,
    limit: int | None = None,
) -> TransportReport:
    """Mapping into a tensor of finite coefficient algebras versus mapping
    into the inner construction in two stages; the morphism oracle count is
    reported alongside."""
    from .basis import TensorBasisAlgebra

    C12 = TensorBasisAlgebra(C1, C2)
    full12 = tuple(sorted(C12.finite_basis(), key=C12.order_key))
    lhs = build_mapping_algebra(MappingProblem(B, C12, {b: full12 for b in B.gens}))
    n_l = len(enumerate_points(lhs.presentation, field, limit=limit))
    full2 = tuple(sorted(C2.finite_basis(), key=C2.order_key))
    inner = build_mapping_algebra(MappingProblem(B, C2, {b: full2 for b in B.gens}))
    full1 = tuple(sorted(C1.finite_basis(), key=C1.order_key))
    outer = build_mapping_algebra(
        MappingProblem(
            inner.presentation, C1, {b: full1 for b in inner.presentation.gens}
        )
    )
    n_r = len(enumerate_points(outer.presentation, field, limit=limit))
    oracle = len(enumerate_morphisms(B, C12, full12, field, limit=limit))
    return TransportReport("exponential law", n_l, n_r, oracle)

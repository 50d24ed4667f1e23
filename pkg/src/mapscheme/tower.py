"""Towers of presented algebras and their represented morphisms.

A tower is a finite initial segment of an N-indexed inverse system: one
presentation per level plus connecting maps from higher to lower levels
satisfying the usual coherence (identity on equal levels, composition for
triples).  A morphism between towers is represented by finitely many
level-to-level generator-image maps; two representations describe the same
morphism when their union is compatible, which `check_compatibility`
decides up to a degree bound.
"""

from __future__ import annotations

from .freealg import (
    AlgebraPresentation,
    GeneratorImageMap,
    NCPolynomial,
    tensor_presentation,
)
from .groebner import Verdict, combine_verdicts, decide_zero


class TowerError(ValueError):
    pass


def evaluate_poly(p: NCPolynomial, assignment: dict, field):
    """Scalar value of `p` under a generator -> scalar assignment."""
    total = field.zero
    for w, c in p.terms.items():
        v = field.of(c)
        for g in w:
            v = field.mul(v, field.of(assignment[g]))
        total = field.add(total, v)
    return total


class Tower:
    """levels: dict p -> presentation; connector(p_lo, p_hi) builds the
    connecting map from level p_hi down to level p_lo."""

    def __init__(self, name: str, levels: dict, connector):
        if not levels:
            raise TowerError("tower needs at least one level")
        self.name = name
        self.levels = dict(sorted(levels.items()))
        self._connector = connector
        self._cache: dict = {}

    @classmethod
    def single(cls, pres: AlgebraPresentation) -> "Tower":
        return cls(pres.name, {0: pres}, lambda lo, hi: None)

    @property
    def p_max(self) -> int:
        return max(self.levels)

    @property
    def p_min(self) -> int:
        return min(self.levels)

    def available_levels(self) -> list[int]:
        return list(self.levels)

    def level(self, p: int) -> AlgebraPresentation:
        if p not in self.levels:
            raise TowerError(f"level {p} not built in tower {self.name}")
        return self.levels[p]

    def truncated(self, p_top: int) -> "Tower":
        levels = {p: pres for p, pres in self.levels.items() if p <= p_top}
        return Tower(self.name, levels, self._connector)

    def connecting(self, p_lo: int, p_hi: int) -> GeneratorImageMap:
        if p_lo > p_hi:
            raise TowerError(f"connecting({p_lo},{p_hi}): need p_lo <= p_hi")
        self.level(p_lo), self.level(p_hi)
        key = (p_lo, p_hi)
        if key not in self._cache:
            if p_lo == p_hi:
                m = GeneratorImageMap.identity(self.levels[p_lo])
            else:
                m = self._connector(p_lo, p_hi)
            self._cache[key] = m
        return self._cache[key]

    def __repr__(self):
        return f"Tower({self.name!r}, levels={list(self.levels)})"


class TowerPoint:
    """A scalar point of one tower level; relations must vanish exactly."""

    def __init__(self, tower: Tower, level: int, assignment: dict):
        pres = tower.level(level)
        field = pres.field
        fixed = {}
        for g in pres.gens:
            if g not in assignment:
                raise TowerError(f"point misses a value for {g!r}")
            fixed[g] = field.of(assignment[g])
        for r in pres.relations:
            if evaluate_poly(r, fixed, field) != field.zero:
                raise TowerError(
                    f"assignment violates a level-{level} relation"
                )
        self.tower = tower
        self.level = level
        self.assignment = fixed

    def induce(self, p_hi: int) -> "TowerPoint":
        """The same point seen at a higher level, via the connecting map."""
        conn = self.tower.connecting(self.level, p_hi)
        field = conn.source.field
        vals = {
            g: evaluate_poly(conn.images[g], self.assignment, field)
            for g in conn.source.gens
        }
        return TowerPoint(self.tower, p_hi, vals)

    def as_tuple(self):
        pres = self.tower.level(self.level)
        return tuple(self.assignment[g] for g in pres.gens)

    def __repr__(self):
        return f"TowerPoint(level={self.level}, {self.assignment})"


class ProMorphism:
    """Finitely many level maps representing a morphism of towers."""

    def __init__(self, source: Tower, target: Tower, members, name: str = ""):
        self.source = source
        self.target = target
        self.members: list[tuple[int, int, GeneratorImageMap]] = []
        for i, j, m in members:
            if m.source != source.level(i):
                raise TowerError(f"member source mismatch at level {i}")
            if m.target != target.level(j):
                raise TowerError(f"member target mismatch at level {j}")
            self.members.append((i, j, m))
        self.name = name

    @classmethod
    def identity(cls, tower: Tower) -> "ProMorphism":
        members = [
            (p, p, GeneratorImageMap.identity(tower.level(p)))
            for p in tower.available_levels()
        ]
        return cls(tower, tower, members, name=f"id_{tower.name}")

    def member_into(self, j: int):
        """A member with target exactly j: the one with the smallest target
        level >= j, pushed down along the target tower."""
        candidates = [(jj, i, m) for (i, jj, m) in self.members if jj >= j]
        if not candidates:
            return None
        jj, i, m = min(candidates, key=lambda t: (t[0], t[1]))
        if jj == j:
            return (i, j, m)
        down = self.target.connecting(j, jj)
        return (i, j, m.then(down))

    def union(self, other: "ProMorphism") -> "ProMorphism":
        # the constructor re-checks every member against self's towers, so
        # structurally equal towers built independently are accepted
        return ProMorphism(
            self.source, self.target, self.members + other.members
        )

    def __repr__(self):
        tags = [(i, j) for i, j, _ in self.members]
        return f"ProMorphism({self.name or '?'}, members={tags})"


def _maps_agree(
    f: GeneratorImageMap, g: GeneratorImageMap, degree_bound: int
) -> Verdict:
    """Generator-wise equality modulo the target's relation ideal."""
    verdicts = []
    for gen in f.source.gens:
        d = f.images[gen] - g.images[gen]
        if d.is_zero():
            continue
        v, _ = decide_zero(d, f.target, degree_bound)
        if v is Verdict.REFUTED:
            return Verdict.REFUTED
        verdicts.append(v)
    return combine_verdicts(verdicts)


def check_compatibility(phi: ProMorphism, degree_bound: int = 8) -> Verdict:
    """Both conditions for a represented morphism: every target level is
    reached from above, and any two members agree after moving to a common
    higher source level (checked at max(i,i'), retried at the top source
    level before declaring a genuine mismatch)."""
    if not phi.members:
        return Verdict.REFUTED
    best = max(j for (_, j, _) in phi.members)
    for j in phi.target.available_levels():
        if j > best:
            return Verdict.REFUTED
    out = []
    members = phi.members
    src, tgt = phi.source, phi.target
    for a in range(len(members)):
        for b in range(len(members)):
            i, j, f = members[a]
            i2, j2, f2 = members[b]
            if j > j2:
                continue
            f2_down = f2 if j2 == j else f2.then(tgt.connecting(j, j2))
            for i_common in _common_levels(src, i, i2):
                lhs = f if i_common == i else src.connecting(i, i_common).then(f)
                rhs = (
                    f2_down
                    if i_common == i2
                    else src.connecting(i2, i_common).then(f2_down)
                )
                v = _maps_agree(lhs, rhs, degree_bound)
                if v is not Verdict.REFUTED:
                    break
            out.append(v)
            if v is Verdict.REFUTED:
                return Verdict.REFUTED
    return combine_verdicts(out)


def _common_levels(tower: Tower, i: int, i2: int):
    lo = max(i, i2)
    levels = [lo]
    if tower.p_max > lo:
        levels.append(tower.p_max)
    return levels


def pro_equivalent(
    phi: ProMorphism, psi: ProMorphism, degree_bound: int = 8
) -> Verdict:
    """Same pro-morphism iff the union of the representations is compatible."""
    return check_compatibility(phi.union(psi), degree_bound)


def compose_pro(
    psi: ProMorphism, phi: ProMorphism, levels=None, name: str = ""
) -> ProMorphism:
    """Composite psi after phi, represented at the requested target levels
    of psi's target tower (all available levels by default)."""
    if phi.target is not psi.source and phi.target != psi.source:
        raise TowerError("composition mismatch: target(phi) != source(psi)")
    if levels is None:
        levels = psi.target.available_levels()
    members = []
    for j in levels:
        outer = psi.member_into(j)
        if outer is None:
            raise TowerError(f"no member of {psi.name or 'psi'} reaches level {j}")
        k, _, g = outer
        inner = phi.member_into(k)
        if inner is None:
            raise TowerError(f"no member of {phi.name or 'phi'} reaches level {k}")
        i, _, f = inner
        members.append((i, j, f.then(g)))
    return ProMorphism(phi.source, psi.target, members, name=name)


# ---------------------------------------------------------------------------
# tensor towers
# ---------------------------------------------------------------------------


def _uniform_renames(t1: Tower, t2: Tower):
    names1 = {g for p in t1.available_levels() for g in t1.level(p).gens}
    names2 = {g for p in t2.available_levels() for g in t2.level(p).gens}
    if names1 & names2:
        return (lambda g: f"{g}@1"), (lambda g: f"{g}@2")
    return (lambda g: g), (lambda g: g)


def tensor_towers(t1: Tower, t2: Tower, name: str | None = None) -> Tower:
    """Levelwise tensor product along the diagonal of the two chains."""
    rn1, rn2 = _uniform_renames(t1, t2)
    common = sorted(set(t1.available_levels()) & set(t2.available_levels()))
    if not common:
        raise TowerError("towers share no levels")

    def build_level(p):
        p1 = t1.level(p).renamed({g: rn1(g) for g in t1.level(p).gens})
        p2 = t2.level(p).renamed({g: rn2(g) for g in t2.level(p).gens})
        return tensor_presentation(p1, p2)

    levels = {p: build_level(p) for p in common}

    def connector(lo, hi):
        c1 = t1.connecting(lo, hi)
        c2 = t2.connecting(lo, hi)
        target = levels[lo]
        images = {}
        for g in t1.level(hi).gens:
            img = c1.images[g]
            images[rn1(g)] = target.poly(
                {tuple(rn1(x) for x in w): c for w, c in img.terms.items()}
            )
        for g in t2.level(hi).gens:
            img = c2.images[g]
            images[rn2(g)] = target.poly(
                {tuple(rn2(x) for x in w): c for w, c in img.terms.items()}
            )
        return GeneratorImageMap(levels[hi], target, images)

    return Tower(name or f"({t1.name} (x) {t2.name})", levels, connector)


def tensor_member_maps(
    maps: list[GeneratorImageMap],
    source: AlgebraPresentation,
    target: AlgebraPresentation,
    source_renames,
    target_renames,
) -> GeneratorImageMap:
    """Tensor of level maps between already-built tensor presentations;
    `source_renames`/`target_renames` are the per-leg name translations."""
    images = {}
    for f, s_rn, t_rn in zip(maps, source_renames, target_renames):
        for g in f.source.gens:
            img = f.images[g]
            images[s_rn(g)] = target.poly(
                {tuple(t_rn(x) for x in w): c for w, c in img.terms.items()}
            )
    return GeneratorImageMap(source, target, images)

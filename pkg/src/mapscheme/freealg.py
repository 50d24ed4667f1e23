"""Free associative algebras with exact coefficients.

Elements are formal linear combinations of words over a generator alphabet
(`NCPolynomial`), stored sparsely as ``word -> nonzero coefficient``.  Words
multiply by concatenation, so nothing commutes unless a relation says so.
Finitely presented quotients are described by `AlgebraPresentation`; maps
between them by generator images (`GeneratorImageMap`).

The term order used everywhere is degree-lexicographic with ties broken by
the declared generator order; this makes every printed polynomial and every
rewriting step reproducible.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .fields import Field, QQ

Word = tuple[str, ...]

EMPTY_WORD: Word = ()


class AlgebraError(ValueError):
    pass


class FreeAlgebra:
    """Parent object fixing the scalar field and the ordered alphabet."""

    __slots__ = ("field", "gens", "_index")

    def __init__(self, field: Field, gens: Iterable[str]):
        self.field = field
        self.gens = tuple(gens)
        if len(set(self.gens)) != len(self.gens):
            raise AlgebraError(f"duplicate generator names in {self.gens}")
        self._index = {g: i for i, g in enumerate(self.gens)}

    def __eq__(self, other):
        return (
            isinstance(other, FreeAlgebra)
            and self.field == other.field
            and self.gens == other.gens
        )

    def __hash__(self):
        return hash((self.field, self.gens))

    def __repr__(self):
        return f"FreeAlgebra({self.field!r}, {list(self.gens)})"

    def word_key(self, w: Word):
        """deglex sort key; larger key = larger word."""
        idx = self._index
        return (len(w), tuple(idx[g] for g in w))

    def index(self, g: str) -> int:
        return self._index[g]

    # -- element constructors ------------------------------------------

    def poly(self, terms: Mapping[Word, object]) -> "NCPolynomial":
        clean = {}
        for w, c in terms.items():
            for g in w:
                if g not in self._index:
                    raise AlgebraError(f"unknown generator {g!r}")
            cc = self.field.of(c)
            if cc != self.field.zero:
                clean[tuple(w)] = cc
        return NCPolynomial(self, clean)

    def zero(self) -> "NCPolynomial":
        return NCPolynomial(self, {})

    def one(self) -> "NCPolynomial":
        return NCPolynomial(self, {EMPTY_WORD: self.field.one})

    def gen(self, name: str) -> "NCPolynomial":
        if name not in self._index:
            raise AlgebraError(f"unknown generator {name!r}")
        return NCPolynomial(self, {(name,): self.field.one})

    def scalar(self, c) -> "NCPolynomial":
        return self.poly({EMPTY_WORD: c})


class NCPolynomial:
    """Sparse noncommutative polynomial; treat as immutable."""

    __slots__ = ("alg", "terms", "_hash")

    def __init__(self, alg: FreeAlgebra, terms: dict):
        self.alg = alg
        self.terms = terms
        self._hash = None

    # -- queries --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Max word length; -1 for the zero polynomial."""
        return max((len(w) for w in self.terms), default=-1)

    def sorted_terms(self, reverse: bool = True):
        key = self.alg.word_key
        return sorted(self.terms.items(), key=lambda it: key(it[0]), reverse=reverse)

    def leading_word(self) -> Word:
        if not self.terms:
            raise AlgebraError("zero polynomial has no leading word")
        return max(self.terms, key=self.alg.word_key)

    def coefficient(self, w: Word):
        return self.terms.get(tuple(w), self.alg.field.zero)

    def support_letters(self) -> set[str]:
        out: set[str] = set()
        for w in self.terms:
            out.update(w)
        return out

    def monic(self) -> "NCPolynomial":
        if not self.terms:
            return self
        f = self.alg.field
        lc = self.terms[self.leading_word()]
        if lc == f.one:
            return self
        return self.scale(f.inv(lc))

    # -- arithmetic -----------------------------------------------------

    def _check(self, other: "NCPolynomial"):
        if self.alg != other.alg:
            raise AlgebraError("operands live in different free algebras")

    def __add__(self, other: "NCPolynomial") -> "NCPolynomial":
        self._check(other)
        f = self.alg.field
        terms = dict(self.terms)
        for w, c in other.terms.items():
            s = f.add(terms.get(w, f.zero), c)
            if s == f.zero:
                terms.pop(w, None)
            else:
                terms[w] = s
        return NCPolynomial(self.alg, terms)

    def __neg__(self) -> "NCPolynomial":
        f = self.alg.field
        return NCPolynomial(self.alg, {w: f.neg(c) for w, c in self.terms.items()})

    def __sub__(self, other: "NCPolynomial") -> "NCPolynomial":
        return self + (-other)

    def __mul__(self, other: "NCPolynomial") -> "NCPolynomial":
        self._check(other)
        f = self.alg.field
        terms: dict = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                s = f.add(terms.get(w, f.zero), f.mul(c1, c2))
                if s == f.zero:
                    terms.pop(w, None)
                else:
                    terms[w] = s
        return NCPolynomial(self.alg, terms)

    def __pow__(self, n: int) -> "NCPolynomial":
        if n < 0:
            raise AlgebraError("negative power")
        out = self.alg.one()
        for _ in range(n):
            out = out * self
        return out

    def scale(self, c) -> "NCPolynomial":
        f = self.alg.field
        cc = f.of(c)
        if cc == f.zero:
            return self.alg.zero()
        return NCPolynomial(self.alg, {w: f.mul(v, cc) for w, v in self.terms.items()})

    def reversed_words(self) -> "NCPolynomial":
        """Mirror every word; the anti-multiplicative twin of the identity."""
        out: dict = {}
        f = self.alg.field
        for w, c in self.terms.items():
            rw = w[::-1]
            s = f.add(out.get(rw, f.zero), c)
            if s == f.zero:
                out.pop(rw, None)
            else:
                out[rw] = s
        return NCPolynomial(self.alg, out)

    # -- equality -------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, NCPolynomial)
            and self.alg == other.alg
            and self.terms == other.terms
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.alg, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        return f"<{format_poly(self)}>"


def format_poly(p: NCPolynomial) -> str:
    """Canonical text form: terms in descending deglex order."""
    if p.is_zero():
        return "0"
    f = p.alg.field
    parts = []
    for w, c in p.sorted_terms():
        body = "*".join(w)
        if not w:
            piece = f.format(c)
        elif c == f.one:
            piece = body
        elif f.p is None and c == -f.one:
            piece = "-" + body
        else:
            piece = f"{f.format(c)}*{body}"
        parts.append(piece)
    out = parts[0]
    for piece in parts[1:]:
        if piece.startswith("-"):
            out += " - " + piece[1:]
        else:
            out += " + " + piece
    return out


def substitute(p: NCPolynomial, images: Mapping[str, object], one, reverse: bool = False):
    """Extend generator images to `p` as an algebra (or anti-algebra) map.

    `images` must cover every letter of `p`; image values may live in any
    structure with ``+``, ``*`` and ``.scale(coeff)`` (another free algebra,
    a basis-tensor element, ...).  `one` is the target's unit, used for the
    empty word.  With ``reverse=True`` each word is evaluated right-to-left.
    """
    for g in p.support_letters():
        if g not in images:
            raise AlgebraError(f"no image supplied for generator {g!r}")
    acc = None
    for w, c in p.sorted_terms():
        val = one
        letters = w[::-1] if reverse else w
        for g in letters:
            val = val * images[g]
        val = val.scale(c)
        acc = val if acc is None else acc + val
    return acc if acc is not None else one.scale(0)


class AlgebraPresentation:
    """Generators plus a finite relation list; the relation polynomials
    generate the two-sided ideal that is quotiented out.

    Name is cosmetic: equality and hashing look only at the field, the
    ordered generators, the relations and the commutative flag.
    """

    __slots__ = ("name", "field", "gens", "relations", "commutative", "_alg", "_hash")

    def __init__(
        self,
        name: str,
        field: Field,
        gens: Iterable[str],
        relations: Iterable[NCPolynomial] = (),
        commutative: bool = False,
    ):
        self.name = name
        self.field = field
        self.gens = tuple(gens)
        self._alg = FreeAlgebra(field, self.gens)
        rels = []
        for r in relations:
            if r.alg != self._alg:
                r = self._alg.poly(r.terms)  # revalidates alphabet & field
            if not r.is_zero():
                rels.append(r)
        self.relations = tuple(rels)
        self.commutative = bool(commutative)
        self._hash = None

    @property
    def algebra(self) -> FreeAlgebra:
        return self._alg

    def poly(self, terms: Mapping[Word, object]) -> NCPolynomial:
        return self._alg.poly(terms)

    def gen(self, name: str) -> NCPolynomial:
        return self._alg.gen(name)

    def max_relation_degree(self) -> int:
        return max((r.degree() for r in self.relations), default=0)

    def renamed(self, mapping: Mapping[str, str], name: str | None = None) -> "AlgebraPresentation":
        new_gens = tuple(mapping[g] for g in self.gens)
        alg = FreeAlgebra(self.field, new_gens)
        rels = [
            alg.poly({tuple(mapping[g] for g in w): c for w, c in r.terms.items()})
            for r in self.relations
        ]
        return AlgebraPresentation(
            name or self.name, self.field, new_gens, rels, self.commutative
        )

    def __eq__(self, other):
        return (
            isinstance(other, AlgebraPresentation)
            and self.field == other.field
            and self.gens == other.gens
            and self.relations == other.relations
            and self.commutative == other.commutative
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.gens, self.relations, self.commutative))
        return self._hash

    def __repr__(self):
        return f"AlgebraPresentation({self.name!r}, gens={len(self.gens)}, rels={len(self.relations)})"


def base_field_presentation(field: Field, name: str = "K") -> AlgebraPresentation:
    """The zero-generator presentation of the scalars."""
    return AlgebraPresentation(name, field, (), (), commutative=True)


def _leg_names(parts: list[AlgebraPresentation]) -> list[dict[str, str]]:
    all_names = [g for p in parts for g in p.gens]
    if len(set(all_names)) == len(all_names):
        return [{g: g for g in p.gens} for p in parts]
    return [{g: f"{g}@{i + 1}" for g in p.gens} for i, p in enumerate(parts)]


def tensor_presentation(*parts: AlgebraPresentation, name: str | None = None) -> AlgebraPresentation:
    """Presentation of the tensor product of the given quotient algebras.

    Generators of different legs commute (cross commutators are added as
    relations); names are kept when globally unique, otherwise every
    generator is tagged ``name@leg``.
    """
    parts_l = list(parts)
    if not parts_l:
        raise AlgebraError("tensor of zero factors")
    field = parts_l[0].field
    for p in parts_l:
        if p.field != field:
            raise AlgebraError("tensor factors over different fields")
    renames = _leg_names(parts_l)
    gens: list[str] = []
    for p, rn in zip(parts_l, renames):
        gens.extend(rn[g] for g in p.gens)
    alg = FreeAlgebra(field, gens)
    rels: list[NCPolynomial] = []
    for p, rn in zip(parts_l, renames):
        for r in p.relations:
            rels.append(
                alg.poly({tuple(rn[g] for g in w): c for w, c in r.terms.items()})
            )
    one = field.one
    for i in range(len(parts_l)):
        for j in range(i + 1, len(parts_l)):
            for g in parts_l[i].gens:
                for h in parts_l[j].gens:
                    a, b = renames[i][g], renames[j][h]
                    rels.append(alg.poly({(a, b): one, (b, a): field.neg(one)}))
    tensor_name = name or "(" + " (x) ".join(p.name for p in parts_l) + ")"
    commutative = all(p.commutative for p in parts_l)
    return AlgebraPresentation(tensor_name, field, gens, rels, commutative)


def tensor_leg_rename(parts: list[AlgebraPresentation]) -> list[dict[str, str]]:
    """The same renaming tensor_presentation would apply (for embeddings)."""
    return _leg_names(parts)


class GeneratorImageMap:
    """A map between presented algebras, given on generators.

    ``antimultiplicative=True`` means words are evaluated in reverse order
    (antipode-style maps).  `verified_to_degree` records the largest bound
    at which the relation-preservation check has run (None = unverified).
    """

    __slots__ = ("source", "target", "images", "antimultiplicative", "verified_to_degree")

    def __init__(
        self,
        source: AlgebraPresentation,
        target: AlgebraPresentation,
        images: Mapping[str, NCPolynomial],
        antimultiplicative: bool = False,
        verified_to_degree: int | None = None,
    ):
        for g in source.gens:
            if g not in images:
                raise AlgebraError(f"no image for generator {g!r}")
        fixed: dict[str, NCPolynomial] = {}
        for g in source.gens:
            img = images[g]
            if img.alg != target.algebra:
                img = target.poly(img.terms)
            fixed[g] = img
        self.source = source
        self.target = target
        self.images = fixed
        self.antimultiplicative = bool(antimultiplicative)
        self.verified_to_degree = verified_to_degree

    @classmethod
    def identity(cls, pres: AlgebraPresentation) -> "GeneratorImageMap":
        return cls(pres, pres, {g: pres.gen(g) for g in pres.gens})

    def apply(self, p: NCPolynomial) -> NCPolynomial:
        if p.alg != self.source.algebra:
            raise AlgebraError("polynomial not over the source presentation")
        return substitute(
            p, self.images, self.target.algebra.one(), reverse=self.antimultiplicative
        )

    def then(self, nxt: "GeneratorImageMap") -> "GeneratorImageMap":
        """Composite self followed by nxt (source of nxt = target of self)."""
        if nxt.source != self.target:
            raise AlgebraError("composition mismatch")
        images = {g: nxt.apply(img) for g, img in self.images.items()}
        return GeneratorImageMap(
            self.source,
            nxt.target,
            images,
            antimultiplicative=self.antimultiplicative != nxt.antimultiplicative,
        )

    def equal_on_generators(self, other: "GeneratorImageMap") -> bool:
        return (
            self.source.gens == other.source.gens
            and self.target == other.target
            and all(self.images[g] == other.images[g] for g in self.source.gens)
        )

    def __repr__(self):
        kind = "anti" if self.antimultiplicative else "alg"
        return f"GeneratorImageMap({self.source.name} -> {self.target.name}, {kind})"


def commutator_relations(pres: AlgebraPresentation) -> list[NCPolynomial]:
    """All generator-pair commutators not already among the relations."""
    alg = pres.algebra
    one = pres.field.one
    existing = set(pres.relations) | {(-r) for r in pres.relations}
    out = []
    for i in range(len(pres.gens)):
        for j in range(i + 1, len(pres.gens)):
            g, h = pres.gens[i], pres.gens[j]
            c = alg.poly({(g, h): one, (h, g): pres.field.neg(one)})
            if c not in existing:
                out.append(c)
    return out


def commutativize_presentation(pres: AlgebraPresentation) -> AlgebraPresentation:
    extra = commutator_relations(pres)
    return AlgebraPresentation(
        pres.name + "_c" if not pres.commutative else pres.name,
        pres.field,
        pres.gens,
        list(pres.relations) + extra,
        commutative=True,
    )

"""Gluing two graded seeds at frozen variables of equal degree.

The glued seed identifies one frozen variable on each side into a single
proxy variable z: its cluster is the union of both clusters with the two
chosen frozens replaced by z, its exchange matrix stacks the two factor
matrices as diagonal blocks with the z row carrying both excised rows, and
its grading keeps all remaining degrees plus the common degree at z.

When the glued frozens have degree 1 the glued algebra maps isomorphically
onto the Segre product of the factors (the graded subalgebra of the tensor
product spanned by equal-bidegree parts). The map sends a left variable v
to v (x) y^deg(v), a right variable w to x^deg(w) (x) w, and z to x (x) y.
Tensors are represented as Laurent polynomials over the disjoint union of
the factor variables, so x (x) y is literally the monomial x*y; the
per-monomial bidegree check recovers the Segre grading.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Union

from .laurent import LaurentPoly, Monomial, Universe, Var
from .reports import Report, Witness
from .seeds import (
    InternalInconsistencyError,
    Seed,
    SeedVariable,
    excise_row,
    ExchangeMatrix,
    mutate_seed,
    validate_seed,
)


class GlueError(ValueError):
    """The requested gluing is not possible (mutable vertex, degree mismatch...)."""


def _fresh(name: str, taken: set[str]) -> str:
    while name in taken:
        name = name + "_r"
    return name


@dataclass(frozen=True)
class GluedSlot:
    side: str  # "left" | "right" | "proxy"
    origin: Var | None  # variable in the factor universe (None for the proxy)


@dataclass(frozen=True)
class GluedSeed:
    """A seed produced by gluing, remembering where each slot came from."""

    seed: Seed
    proxy: Var
    slots: tuple[GluedSlot, ...]
    left_glued: Var
    right_glued: Var
    glued_degree: int

    def left_map(self) -> dict[int, Var]:
        """Factor uid -> glued variable, sending the glued frozen to z."""
        out = {self.left_glued.uid: self.proxy}
        for sv, slot in zip(self.seed.variables, self.slots):
            if slot.side == "left":
                out[slot.origin.uid] = sv.var
        return out

    def right_map(self) -> dict[int, Var]:
        out = {self.right_glued.uid: self.proxy}
        for sv, slot in zip(self.seed.variables, self.slots):
            if slot.side == "right":
                out[slot.origin.uid] = sv.var
        return out

    def lift_left(self, p: LaurentPoly) -> LaurentPoly:
        """Rewrite a left-factor element over the glued variables (x -> z)."""
        return p.map_vars(self.seed.universe, self.left_map())

    def lift_right(self, p: LaurentPoly) -> LaurentPoly:
        return p.map_vars(self.seed.universe, self.right_map())

    def mutate(self, k: Union[str, Var]) -> "GluedSeed":
        return GluedSeed(
            seed=mutate_seed(self.seed, k),
            proxy=self.proxy,
            slots=self.slots,
            left_glued=self.left_glued,
            right_glued=self.right_glued,
            glued_degree=self.glued_degree,
        )


def glue(s1: Seed, x: Union[str, Var], s2: Seed, y: Union[str, Var]) -> GluedSeed:
    """Glue frozen x of s1 to frozen y of s2 (equal degrees required)."""
    for label, s in (("left", s1), ("right", s2)):
        problems = validate_seed(s)
        if problems:
            raise GlueError(f"{label} seed is invalid: " + "; ".join(problems))
    x = s1.resolve(x)
    y = s2.resolve(y)
    if not s1.is_frozen(x):
        raise GlueError(f"left gluing variable {x.name!r} is mutable")
    if not s2.is_frozen(y):
        raise GlueError(f"right gluing variable {y.name!r} is mutable")
    dx, dy = s1.degree_of(x), s2.degree_of(y)
    if dx != dy:
        raise GlueError(f"degree mismatch: deg({x.name}) = {dx} but deg({y.name}) = {dy}")

    left_keep = [sv for sv in s1.variables if sv.var.uid != x.uid]
    right_keep = [sv for sv in s2.variables if sv.var.uid != y.uid]
    names: list[str] = []
    taken: set[str] = set()
    for sv in left_keep:
        names.append(sv.var.name)
        taken.add(sv.var.name)
    right_names = []
    for sv in right_keep:
        n = _fresh(sv.var.name, taken)
        right_names.append(n)
        names.append(n)
        taken.add(n)
    z_name = _fresh("z", taken)
    names.append(z_name)
    uni = Universe(names)

    slots: list[GluedSlot] = (
        [GluedSlot("left", sv.var) for sv in left_keep]
        + [GluedSlot("right", sv.var) for sv in right_keep]
        + [GluedSlot("proxy", None)]
    )
    flags = [sv.frozen for sv in left_keep] + [sv.frozen for sv in right_keep] + [True]
    svars = tuple(
        SeedVariable(var=uni.vars[i], frozen=flags[i], value=uni.gen(uni.vars[i]))
        for i in range(len(names))
    )

    exc1 = excise_row(s1.matrix, x)
    exc2 = excise_row(s2.matrix, y)
    n1c, n2c = len(s1.matrix.cols), len(s2.matrix.cols)
    rows = tuple(sv.var for sv in svars)
    cols = tuple(v for v, f in zip(rows, flags) if not f)
    entries: list[tuple[int, ...]] = []
    for r in exc1.remainder.entries:
        entries.append(tuple(r) + (0,) * n2c)
    for r in exc2.remainder.entries:
        entries.append((0,) * n1c + tuple(r))
    entries.append(tuple(exc1.row) + tuple(exc2.row))
    matrix = ExchangeMatrix(rows=rows, cols=cols, entries=tuple(entries))

    def kept_degrees(seed: Seed, skip: Var) -> list[int]:
        return [g for sv, g in zip(seed.variables, seed.grading) if sv.var.uid != skip.uid]

    grading = tuple(kept_degrees(s1, x) + kept_degrees(s2, y) + [dx])
    glued = GluedSeed(
        seed=Seed(
            variables=svars,
            matrix=matrix,
            grading=grading,
            initial_degrees=grading,
        ),
        proxy=uni.vars[-1],
        slots=tuple(slots),
        left_glued=x,
        right_glued=y,
        glued_degree=dx,
    )
    problems = validate_seed(glued.seed)
    if problems:
        raise InternalInconsistencyError(
            "glued seed failed validation: " + "; ".join(problems)
        )
    return glued


def glued_equal_after_swap(g_ab: GluedSeed, g_ba: GluedSeed) -> bool:
    """True iff g_ba is g_ab with the left/right blocks interchanged.

    Compares frozen flags, degrees and matrix entries under the canonical
    relabeling that matches slots by provenance with sides swapped."""
    swap = {"left": "right", "right": "left", "proxy": "proxy"}
    index_ab: dict[tuple[str, int | None], int] = {}
    for i, slot in enumerate(g_ab.slots):
        key = (slot.side, slot.origin.uid if slot.origin else None)
        index_ab[key] = i
    perm: list[int] = []
    for slot in g_ba.slots:
        key = (swap[slot.side], slot.origin.uid if slot.origin else None)
        if key not in index_ab:
            return False
        perm.append(index_ab[key])
    if sorted(perm) != list(range(len(g_ab.slots))):
        return False
    sa, sb = g_ab.seed, g_ba.seed
    for i, j in enumerate(perm):
        if sb.variables[i].frozen != sa.variables[j].frozen:
            return False
        if sb.grading[i] != sa.grading[j]:
            return False
    cols_b = [sb.matrix.rows.index(c) for c in sb.matrix.cols]
    for i in range(len(sb.matrix.rows)):
        for ci, l in enumerate(cols_b):
            a_row = perm[i]
            a_col_var = sa.matrix.rows[perm[l]]
            if sb.matrix.entries[i][ci] != sa.matrix.entry(sa.matrix.rows[a_row], a_col_var):
                return False
    return True


def check_commutativity(
    s1: Seed, x: Union[str, Var], s2: Seed, y: Union[str, Var]
) -> bool:
    """Gluing is symmetric: both orders give the same seed up to relabeling."""
    return glued_equal_after_swap(glue(s1, x, s2, y), glue(s2, y, s1, x))


# -- tensor representation ----------------------------------------------------


@dataclass(frozen=True)
class TensorSpace:
    """The ambient space for tensors: Laurent polynomials over the disjoint
    union of the two factor variable sets, with per-side degree data."""

    universe: Universe
    left_images: tuple[Var, ...]  # aligned with the left factor's variables
    right_images: tuple[Var, ...]
    left_degrees: dict[int, int]  # tensor uid -> degree under the left grading
    right_degrees: dict[int, int]
    x_image: Var
    y_image: Var

    def embed_left(self, p: LaurentPoly) -> LaurentPoly:
        images = {i: v for i, v in enumerate(self.left_images)}
        return p.map_vars(self.universe, images)

    def embed_right(self, p: LaurentPoly) -> LaurentPoly:
        images = {i: v for i, v in enumerate(self.right_images)}
        return p.map_vars(self.universe, images)

    def element(self, value: LaurentPoly) -> "SegreTensor":
        lds, rds = set(), set()
        for m in value.terms:
            ld = rd = 0
            for u, e in m:
                if u in self.left_degrees:
                    ld += e * self.left_degrees[u]
                else:
                    rd += e * self.right_degrees[u]
            lds.add(ld)
            rds.add(rd)
        return SegreTensor(
            space=self,
            value=value,
            left_degree=lds.pop() if len(lds) == 1 else None,
            right_degree=rds.pop() if len(rds) == 1 else None,
        )


@dataclass(frozen=True)
class SegreTensor:
    """An element of the tensor product, with its bidegree when uniform.

    Membership in the Segre product requires every monomial's left degree
    to equal its own right degree (the diagonal part of the bigrading)."""

    space: TensorSpace
    value: LaurentPoly
    left_degree: int | None
    right_degree: int | None

    def is_member(self) -> bool:
        for m in self.value.terms:
            ld = rd = 0
            for u, e in m:
                if u in self.space.left_degrees:
                    ld += e * self.space.left_degrees[u]
                else:
                    rd += e * self.space.right_degrees[u]
            if ld != rd:
                return False
        return True

    def render(self) -> str:
        return self.value.render()


def segre_membership(t: SegreTensor) -> bool:
    return t.is_member()


def tensor_space(s1: Seed, x: Var, s2: Seed, y: Var) -> TensorSpace:
    names: list[str] = [sv.var.name for sv in s1.variables]
    taken = set(names)
    right_names = []
    for sv in s2.variables:
        n = _fresh(sv.var.name, taken)
        right_names.append(n)
        names.append(n)
        taken.add(n)
    uni = Universe(names)
    n1 = len(s1.variables)
    left_images = tuple(uni.vars[:n1])
    right_images = tuple(uni.vars[n1:])
    left_degrees = {
        uni.vars[i].uid: d for i, d in enumerate(s1.initial_degrees)
    }
    right_degrees = {
        uni.vars[n1 + i].uid: d for i, d in enumerate(s2.initial_degrees)
    }
    return TensorSpace(
        universe=uni,
        left_images=left_images,
        right_images=right_images,
        left_degrees=left_degrees,
        right_degrees=right_degrees,
        x_image=left_images[s1.slot_index(x)],
        y_image=right_images[s2.slot_index(y)],
    )


@dataclass(frozen=True)
class GluePair:
    """A gluing together with both factors and the tensor space it maps into."""

    left: Seed
    left_var: Var
    right: Seed
    right_var: Var
    glued: GluedSeed
    space: TensorSpace


def make_glue_pair(
    s1: Seed, x: Union[str, Var], s2: Seed, y: Union[str, Var]
) -> GluePair:
    g = glue(s1, x, s2, y)
    return GluePair(
        left=s1,
        left_var=g.left_glued,
        right=s2,
        right_var=g.right_glued,
        glued=g,
        space=tensor_space(s1, g.left_glued, s2, g.right_glued),
    )


def _substitution_images(
    pair: GluePair, *, naive: bool, deg_left: int | None = None, deg_right: int | None = None
) -> dict[int, Monomial]:
    """Images of the glued initial variables inside the tensor universe."""
    space = pair.space
    dx = pair.glued.glued_degree if deg_left is None else deg_left
    dy = pair.glued.glued_degree if deg_right is None else deg_right
    left_pos = {sv.var.uid: i for i, sv in enumerate(pair.left.variables)}
    right_pos = {sv.var.uid: i for i, sv in enumerate(pair.right.variables)}
    images: dict[int, Monomial] = {}
    for sv, slot in zip(pair.glued.seed.variables, pair.glued.slots):
        if slot.side == "left":
            i = left_pos[slot.origin.uid]
            v_img = space.left_images[i]
            deg = pair.left.initial_degrees[i]
            self_exp = dy if naive else 1
            images[sv.var.uid] = Monomial.make(
                [(v_img.uid, self_exp), (space.y_image.uid, deg)]
            )
        elif slot.side == "right":
            i = right_pos[slot.origin.uid]
            v_img = space.right_images[i]
            deg = pair.right.initial_degrees[i]
            self_exp = dx if naive else 1
            images[sv.var.uid] = Monomial.make(
                [(space.x_image.uid, deg), (v_img.uid, self_exp)]
            )
        else:
            if naive:
                images[sv.var.uid] = Monomial.make(
                    [(space.x_image.uid, dy), (space.y_image.uid, dx)]
                )
            else:
                images[sv.var.uid] = Monomial.make(
                    [(space.x_image.uid, 1), (space.y_image.uid, 1)]
                )
    return images


def segre_map(
    pair: GluePair, v: LaurentPoly, expected_degree: int | None = None
) -> SegreTensor:
    """The substitution homomorphism from the glued algebra into the tensor
    product: v_left -> v * y^deg(v), v_right -> x^deg(v) * v, z -> x*y.

    Only defined when the glued frozens have degree 1. The caller may pass
    the degree it believes v has; it is cross-checked against a fresh
    weighted-degree computation."""
    if pair.glued.glued_degree != 1:
        raise GlueError(
            f"the Segre map needs glued frozens of degree 1, got {pair.glued.glued_degree}"
        )
    _check_claimed_degree(pair, v, expected_degree)
    images = _substitution_images(pair, naive=False)
    out = pair.space.element(v.substitute(pair.space.universe, images))
    if not out.is_member():
        raise InternalInconsistencyError("Segre map produced a non-diagonal tensor")
    return out


def naive_segre_map(
    pair: GluePair,
    v: LaurentPoly,
    expected_degree: int | None = None,
    *,
    deg_left: int | None = None,
    deg_right: int | None = None,
) -> SegreTensor:
    """The modified substitution v_left -> v^deg(y) * y^deg(v), v_right ->
    x^deg(v) * v^deg(x), z -> x^deg(y) * y^deg(x).

    This avoids the degree-1 requirement (any strictly positive degrees are
    accepted, and the exponents may be overridden for experiments) but it
    does not commute with mutation unless both degrees are 1."""
    dx = pair.glued.glued_degree if deg_left is None else deg_left
    dy = pair.glued.glued_degree if deg_right is None else deg_right
    if dx < 1 or dy < 1:
        raise GlueError("the modified map needs strictly positive glued degrees")
    _check_claimed_degree(pair, v, expected_degree)
    images = _substitution_images(pair, naive=True, deg_left=dx, deg_right=dy)
    return pair.space.element(v.substitute(pair.space.universe, images))


def _check_claimed_degree(pair: GluePair, v: LaurentPoly, expected: int | None) -> None:
    if expected is None:
        return
    actual = v.weighted_degree(pair.glued.seed.initial_degree_map())
    if actual is not None and actual != expected:
        raise ValueError(
            f"claimed degree {expected} but the value has weighted degree {actual}"
        )


# -- verification ---------------------------------------------------------------


def verify_tensor_map(
    s1: Seed,
    x: Union[str, Var],
    s2: Seed,
    y: Union[str, Var],
    depth: int,
    *,
    naive: bool = False,
) -> Report:
    """Check, over every mutation sequence of length <= depth on the glued
    seed, that the image of each cluster variable under the (exact or
    modified) substitution equals the tensor built from the corresponding
    factor-side cluster variable.

    The factor side is computed independently by projecting the mutation
    sequence onto each factor, which is what makes this an oracle rather
    than a restatement of the map."""
    pair = make_glue_pair(s1, x, s2, y)
    return verify_tensor_map_on_pair(pair, depth, naive=naive)


def verify_tensor_map_on_pair(
    pair: GluePair, depth: int, *, naive: bool = False
) -> Report:
    g0 = pair.glued
    if not naive and g0.glued_degree != 1:
        raise GlueError(
            f"the Segre map needs glued frozens of degree 1, got {g0.glued_degree}"
        )
    if naive and g0.glued_degree < 1:
        raise GlueError("the modified map needs strictly positive glued degrees")
    space = pair.space
    images = _substitution_images(pair, naive=naive)
    gd = g0.glued_degree
    x_gen = space.universe.gen(space.x_image)
    y_gen = space.universe.gen(space.y_image)
    left_pos = {sv.var.uid: i for i, sv in enumerate(pair.left.variables)}
    right_pos = {sv.var.uid: i for i, sv in enumerate(pair.right.variables)}

    witnesses: list[Witness] = []
    checked = 0

    def check_slot(gcur: Seed, lcur: Seed, rcur: Seed, idx: int, seq: tuple[str, ...]):
        nonlocal checked
        checked += 1
        slot = g0.slots[idx]
        sv = gcur.variables[idx]
        actual = sv.value.substitute(space.universe, images)
        deg = gcur.grading[idx]
        if slot.side == "proxy":
            expected = x_gen ** gd * y_gen ** gd if naive else x_gen * y_gen
            fdeg = deg
        elif slot.side == "left":
            fidx = left_pos[slot.origin.uid]
            fdeg = lcur.grading[fidx]
            emb = space.embed_left(lcur.variables[fidx].value)
            expected = (emb ** gd if naive else emb) * y_gen ** deg
        else:
            fidx = right_pos[slot.origin.uid]
            fdeg = rcur.grading[fidx]
            emb = space.embed_right(rcur.variables[fidx].value)
            expected = x_gen ** deg * (emb ** gd if naive else emb)
        if fdeg != deg:
            witnesses.append(
                Witness(
                    sequence=seq,
                    slot=sv.var.name,
                    expected=str(fdeg),
                    actual=str(deg),
                    detail="glued and factor degree bookkeeping disagree",
                )
            )
        if expected != actual:
            witnesses.append(
                Witness(
                    sequence=seq,
                    slot=sv.var.name,
                    expected=expected.render(),
                    actual=actual.render(),
                    detail="tensor image does not match the factor-side value",
                )
            )

    def walk(gcur: Seed, lcur: Seed, rcur: Seed, seq: tuple[str, ...], last: Var | None):
        if len(seq) >= depth:
            return
        for k in g0.seed.mutable_vars():
            if last is not None and k.uid == last.uid:
                continue
            idx = g0.seed.slot_index(k)
            slot = g0.slots[idx]
            g2 = mutate_seed(gcur, k)
            if slot.side == "left":
                l2, r2 = mutate_seed(lcur, slot.origin), rcur
            else:
                l2, r2 = lcur, mutate_seed(rcur, slot.origin)
            seq2 = seq + (k.name,)
            check_slot(g2, l2, r2, idx, seq2)
            walk(g2, l2, r2, seq2, k)

    for idx in range(len(g0.seed.variables)):
        check_slot(g0.seed, pair.left, pair.right, idx, ())
    walk(g0.seed, pair.left, pair.right, (), None)

    return Report(
        status="ok" if not witnesses else "mismatch",
        witnesses=witnesses,
        bounds={"depth": depth},
        checked=checked,
    )


@dataclass(frozen=True)
class SurjectivityWitness:
    """a (x) b recovered as a product of three images of the map."""

    left_factor: SegreTensor
    right_factor: SegreTensor
    proxy_power: SegreTensor
    product: SegreTensor


def surjectivity_witness(pair: GluePair, a: LaurentPoly, b: LaurentPoly) -> SurjectivityWitness:
    """Exhibit a (x) b, with a and b homogeneous of equal degree d, as
    map(a) * map(b) * map(z)^-d, and verify the identity exactly."""
    da = a.weighted_degree(pair.left.initial_degree_map())
    db = b.weighted_degree(pair.right.initial_degree_map())
    if da is not None and db is not None and da != db:
        raise GlueError(f"degree mismatch: {da} != {db}")
    d = da if da is not None else (db if db is not None else 0)
    t1 = segre_map(pair, pair.glued.lift_left(a))
    t2 = segre_map(pair, pair.glued.lift_right(b))
    z_image = segre_map(pair, pair.glued.seed.universe.gen(pair.glued.proxy))
    t3_value = z_image.value ** (-d)
    product = t1.value * t2.value * t3_value
    target = pair.space.embed_left(a) * pair.space.embed_right(b)
    if product != target:
        raise InternalInconsistencyError(
            "surjectivity identity failed: "
            f"{product.render()} != {target.render()}"
        )
    return SurjectivityWitness(
        left_factor=t1,
        right_factor=t2,
        proxy_power=pair.space.element(t3_value),
        product=pair.space.element(product),
    )

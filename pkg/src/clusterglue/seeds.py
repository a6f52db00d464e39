"""Graded seeds and their mutation.

A seed is an ordered cluster of variables (mutable and frozen) carrying
exact Laurent-polynomial values, an extended exchange matrix with rows for
every cluster variable and columns for the mutable ones, and an integer
grading vector G with B^T G = 0. Mutation at a mutable vertex k replaces
the value at k through the exchange relation, mutates the matrix, and
updates the degree at k; everything else is untouched.

Seeds are immutable: mutation returns a fresh seed sharing the unchanged
values, so parallel exploration is safe.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .laurent import LaurentPoly, NotDivisibleError, Universe, Var


class SeedError(ValueError):
    """Invalid seed data."""


class MutationError(SeedError):
    """Mutation requested at a frozen or unknown vertex."""


class InternalInconsistencyError(RuntimeError):
    """An invariant the engine guarantees failed; indicates a bug."""


def positive_part(n: int) -> int:
    """max(n, 0)."""
    return n if n > 0 else 0


def negative_part(n: int) -> int:
    """max(-n, 0), so n == positive_part(n) - negative_part(n)."""
    return -n if n < 0 else 0


@dataclass(frozen=True)
class ExchangeMatrix:
    """Integer matrix with rows for all cluster variables and columns for
    the mutable ones; the principal part must be skew-symmetric.

    Sign convention: entry (j, k) > 0 means that many quiver arrows from
    variable j to variable k.
    """

    rows: tuple[Var, ...]
    cols: tuple[Var, ...]
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        row_uids = {v.uid for v in self.rows}
        if len(row_uids) != len(self.rows):
            raise SeedError("duplicate row variables")
        if not set(v.uid for v in self.cols) <= row_uids:
            raise SeedError("columns must be a subset of rows")
        if len(self.entries) != len(self.rows) or any(
            len(r) != len(self.cols) for r in self.entries
        ):
            raise SeedError("entry shape must be rows x cols")

    def row_index(self, v: Var) -> int:
        for i, r in enumerate(self.rows):
            if r.uid == v.uid:
                return i
        raise KeyError(f"{v!r} is not a row")

    def col_index(self, v: Var) -> int:
        for i, c in enumerate(self.cols):
            if c.uid == v.uid:
                return i
        raise KeyError(f"{v!r} is not a column")

    def entry(self, row: Var, col: Var) -> int:
        return self.entries[self.row_index(row)][self.col_index(col)]

    def column(self, col: Var) -> tuple[int, ...]:
        k = self.col_index(col)
        return tuple(r[k] for r in self.entries)

    def is_mutable(self, v: Var) -> bool:
        return any(c.uid == v.uid for c in self.cols)

    def principal_violations(self) -> list[tuple[Var, Var]]:
        """Pairs of mutable variables where B_jk != -B_kj."""
        bad = []
        for j in self.cols:
            for k in self.cols:
                if j.uid < k.uid and self.entry(j, k) != -self.entry(k, j):
                    bad.append((j, k))
        return bad

    def mutated(self, k: Var) -> "ExchangeMatrix":
        """Matrix mutation at mutable vertex k:
        B'_jl = -B_jl when j = k or l = k, else
        B_jl + [B_jk]+ [B_kl]+ - [B_jk]- [B_kl]-.
        """
        try:
            ki = self.col_index(k)
        except KeyError:
            raise MutationError(f"cannot mutate at non-mutable vertex {k.name!r}")
        kr = self.row_index(k)
        krow = self.entries[kr]
        new_rows = []
        for j, row in enumerate(self.entries):
            bjk = row[ki]
            if j == kr:
                new_rows.append(tuple(-e for e in row))
                continue
            new_row = []
            for l, e in enumerate(row):
                if l == ki:
                    new_row.append(-e)
                else:
                    bkl = krow[l]
                    new_row.append(
                        e
                        + positive_part(bjk) * positive_part(bkl)
                        - negative_part(bjk) * negative_part(bkl)
                    )
            new_rows.append(tuple(new_row))
        return ExchangeMatrix(self.rows, self.cols, tuple(new_rows))


@dataclass(frozen=True)
class RowExcision:
    """A matrix split into one row and the remainder, reassemblable."""

    source: ExchangeMatrix
    excised: Var
    row: tuple[int, ...]
    remainder: ExchangeMatrix


def excise_row(matrix: ExchangeMatrix, v: Var) -> RowExcision:
    """Remove the (frozen) row of v; the remainder is again an exchange matrix."""
    if matrix.is_mutable(v):
        raise SeedError(f"can only excise a frozen row, {v.name!r} is mutable")
    i = matrix.row_index(v)
    rows = matrix.rows[:i] + matrix.rows[i + 1 :]
    entries = matrix.entries[:i] + matrix.entries[i + 1 :]
    return RowExcision(
        source=matrix,
        excised=v,
        row=matrix.entries[i],
        remainder=ExchangeMatrix(rows, matrix.cols, entries),
    )


def reassemble(exc: RowExcision) -> ExchangeMatrix:
    """Inverse of excise_row; reproduces the source matrix."""
    i = exc.source.row_index(exc.excised)
    rows = exc.remainder.rows[:i] + (exc.excised,) + exc.remainder.rows[i:]
    entries = exc.remainder.entries[:i] + (exc.row,) + exc.remainder.entries[i:]
    return ExchangeMatrix(rows, exc.source.cols, entries)


@dataclass(frozen=True)
class SeedVariable:
    var: Var
    frozen: bool
    value: LaurentPoly


@dataclass(frozen=True)
class Seed:
    """A graded seed. `grading` and `initial_degrees` are aligned with
    `variables`; `initial_degrees` never changes under mutation and is the
    grading in which all values stay homogeneous."""

    variables: tuple[SeedVariable, ...]
    matrix: ExchangeMatrix
    grading: tuple[int, ...]
    initial_degrees: tuple[int, ...]

    def __post_init__(self):
        if tuple(sv.var for sv in self.variables) != self.matrix.rows:
            raise SeedError("matrix rows must equal the variable list in order")
        mutables = tuple(sv.var for sv in self.variables if not sv.frozen)
        if mutables != self.matrix.cols:
            raise SeedError("matrix columns must be the mutable variables in order")
        if all(not sv.frozen for sv in self.variables) or not self.variables:
            raise SeedError("a seed needs at least one frozen variable")
        if len(self.grading) != len(self.variables):
            raise SeedError("grading length must match the variable list")
        if len(self.initial_degrees) != len(self.variables):
            raise SeedError("initial degree list length must match the variable list")

    @property
    def universe(self) -> Universe:
        return self.variables[0].value.universe

    def resolve(self, v: Union[str, Var]) -> Var:
        if isinstance(v, Var):
            return v
        for sv in self.variables:
            if sv.var.name == v:
                return sv.var
        raise MutationError(f"unknown vertex {v!r}")

    def slot_index(self, v: Union[str, Var]) -> int:
        v = self.resolve(v)
        for i, sv in enumerate(self.variables):
            if sv.var.uid == v.uid:
                return i
        raise MutationError(f"unknown vertex {v.name!r}")

    def value_of(self, v: Union[str, Var]) -> LaurentPoly:
        return self.variables[self.slot_index(v)].value

    def degree_of(self, v: Union[str, Var]) -> int:
        return self.grading[self.slot_index(v)]

    def is_frozen(self, v: Union[str, Var]) -> bool:
        return self.variables[self.slot_index(v)].frozen

    def mutable_vars(self) -> tuple[Var, ...]:
        return self.matrix.cols

    def frozen_vars(self) -> tuple[Var, ...]:
        return tuple(sv.var for sv in self.variables if sv.frozen)

    def initial_degree_map(self) -> dict[int, int]:
        return {sv.var.uid: d for sv, d in zip(self.variables, self.initial_degrees)}


def initial_seed(
    variables: Sequence[tuple[str, bool, int]],
    *,
    matrix: Sequence[Sequence[int]] | None = None,
    arrows: Iterable[tuple[str, str, int]] | None = None,
    check: bool = True,
) -> Seed:
    """Build a seed from (name, frozen, degree) triples plus either an
    explicit rows-x-mutable-cols matrix or a quiver arrow list. Values are
    the generators of a fresh universe."""
    if (matrix is None) == (arrows is None):
        raise SeedError("exactly one of matrix/arrows must be given")
    uni = Universe([name for name, _, _ in variables])
    flags = [frozen for _, frozen, _ in variables]
    svars = tuple(
        SeedVariable(var=uni.vars[i], frozen=flags[i], value=uni.gen(uni.vars[i]))
        for i in range(len(uni.vars))
    )
    pairs = [(uni.vars[i], flags[i]) for i in range(len(uni.vars))]
    if arrows is not None:
        arrow_vars = [(uni.var(a), uni.var(b), int(m)) for a, b, m in arrows]
        mat = matrix_from_arrows(pairs, arrow_vars)
    else:
        cols = tuple(v for v, f in pairs if not f)
        mat = ExchangeMatrix(
            rows=tuple(uni.vars),
            cols=cols,
            entries=tuple(tuple(int(e) for e in row) for row in matrix),
        )
    grading = tuple(int(d) for _, _, d in variables)
    seed = Seed(
        variables=svars, matrix=mat, grading=grading, initial_degrees=grading
    )
    if check:
        problems = validate_seed(seed)
        if problems:
            raise SeedError("; ".join(problems))
    return seed


def validate_seed(seed: Seed) -> list[str]:
    """Check skew-symmetry, B^T G = 0, and homogeneity of every value under
    the initial grading. Violations are returned as data, not raised."""
    problems: list[str] = []
    for j, k in seed.matrix.principal_violations():
        problems.append(
            f"principal part not skew-symmetric at ({j.name}, {k.name})"
        )
    for k in seed.matrix.cols:
        s = sum(
            b * g for b, g in zip(seed.matrix.column(k), seed.grading)
        )
        if s != 0:
            problems.append(f"B^T G != 0 at column {k.name} (got {s})")
    degs = seed.initial_degree_map()
    for sv, g in zip(seed.variables, seed.grading):
        if sv.value.is_zero():
            problems.append(f"value of {sv.var.name} is zero")
            continue
        if not sv.value.is_homogeneous_of(degs, g):
            problems.append(
                f"value of {sv.var.name} is not homogeneous of its degree {g}"
            )
    return problems


def mutate_seed(seed: Seed, k: Union[str, Var]) -> Seed:
    """Fomin-Zelevinsky mutation at mutable vertex k.

    The new value is (prod_j v_j^[B_jk]+ + prod_j v_j^[B_jk]-) / v_k with
    the products over all row variables; the division must be exact. The
    degree at k becomes d - deg(k) with d = sum_j [B_jk]+ deg(j), and is
    cross-checked against a recomputation from the new value.
    """
    k = seed.resolve(k)
    idx = seed.slot_index(k)
    sv = seed.variables[idx]
    if sv.frozen:
        raise MutationError(f"cannot mutate frozen vertex {k.name!r}")
    col = seed.matrix.column(k)
    uni = seed.universe
    pos = uni.one()
    neg = uni.one()
    for entry, other in zip(col, seed.variables):
        if entry > 0:
            pos = pos * other.value ** entry
        elif entry < 0:
            neg = neg * other.value ** (-entry)
    numerator = pos + neg
    try:
        new_value = numerator.div_exact(sv.value)
    except NotDivisibleError as exc:
        raise InternalInconsistencyError(
            f"exchange numerator not divisible by current value at {k.name}"
        ) from exc
    d_pos = sum(positive_part(b) * g for b, g in zip(col, seed.grading))
    d_neg = sum(negative_part(b) * g for b, g in zip(col, seed.grading))
    if d_pos != d_neg:
        raise InternalInconsistencyError(
            f"grading is not mutation-compatible at {k.name}: {d_pos} != {d_neg}"
        )
    new_degree = d_pos - seed.grading[idx]
    recomputed = new_value.weighted_degree(seed.initial_degree_map())
    if recomputed != new_degree:
        raise InternalInconsistencyError(
            f"degree bookkeeping mismatch at {k.name}: "
            f"{new_degree} from the exchange rule, {recomputed} from the value"
        )
    variables = (
        seed.variables[:idx]
        + (SeedVariable(var=sv.var, frozen=False, value=new_value),)
        + seed.variables[idx + 1 :]
    )
    grading = seed.grading[:idx] + (new_degree,) + seed.grading[idx + 1 :]
    return Seed(
        variables=variables,
        matrix=seed.matrix.mutated(k),
        grading=grading,
        initial_degrees=seed.initial_degrees,
    )


def apply_sequence(seed: Seed, ks: Iterable[Union[str, Var]]) -> Seed:
    """Left-to-right composition of mutations."""
    for k in ks:
        seed = mutate_seed(seed, k)
    return seed


def scale_grading(seed: Seed, factor: int) -> Seed:
    """Multiply every degree by a positive integer.

    B^T G = 0 is preserved, and generators stay homogeneous of their scaled
    degree, so this keeps initial seeds valid. Only meant for initial seeds:
    mutated values are homogeneous under the original degrees, not rescaled
    ones.
    """
    if factor < 1:
        raise SeedError("grading scale factor must be a positive integer")
    return Seed(
        variables=seed.variables,
        matrix=seed.matrix,
        grading=tuple(g * factor for g in seed.grading),
        initial_degrees=tuple(g * factor for g in seed.initial_degrees),
    )


def matrix_from_arrows(
    variables: Sequence[tuple[Var, bool]],
    arrows: Iterable[tuple[Var, Var, int]],
) -> ExchangeMatrix:
    """Build the extended exchange matrix from quiver arrows.

    An arrow a -> b with multiplicity m contributes +m at entry (a, b) and
    -m at (b, a); entries between two frozen variables have no slot, so
    such arrows are rejected.
    """
    frozen = {v.uid for v, f in variables if f}
    rows = tuple(v for v, _ in variables)
    cols = tuple(v for v, f in variables if not f)
    row_pos = {v.uid: i for i, v in enumerate(rows)}
    col_pos = {v.uid: i for i, v in enumerate(cols)}
    entries = [[0] * len(cols) for _ in rows]
    for a, b, m in arrows:
        if a.uid not in row_pos or b.uid not in row_pos:
            raise SeedError("arrow endpoint is not a seed variable")
        if a.uid in frozen and b.uid in frozen:
            raise SeedError(
                f"arrow between frozen variables {a.name} -> {b.name} is not representable"
            )
        if m < 0:
            a, b, m = b, a, -m
        if b.uid in col_pos:
            entries[row_pos[a.uid]][col_pos[b.uid]] += m
        if a.uid in col_pos:
            entries[row_pos[b.uid]][col_pos[a.uid]] -= m
    return ExchangeMatrix(rows, cols, tuple(tuple(r) for r in entries))


def arrows_from_matrix(
    matrix: ExchangeMatrix, frozen: Iterable[Var]
) -> list[tuple[Var, Var, int]]:
    """Recover the quiver arrow list (each arrow reported once, mult > 0)."""
    frozen_uids = {v.uid for v in frozen}
    out = []
    for k in matrix.cols:
        for j, e in zip(matrix.rows, matrix.column(k)):
            if e > 0:
                out.append((j, k, e))
            elif e < 0 and j.uid in frozen_uids:
                out.append((k, j, -e))
    out.sort(key=lambda a: (a[0].uid, a[1].uid))
    return out

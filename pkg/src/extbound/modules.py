"""Morphisms and module-category operations for quiver representations.

Covers hom-space bases, add-membership via the trace criterion, a certified
isomorphism ladder, Fitting decomposition into indecomposables, radicals and
tops, minimal projective covers, and syzygies/cosyzygies.  A true/false
answer from the certified routines always carries a witness or a structural
reason; "undetermined" is an explicit outcome, never a silent guess.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .exactla import (
    Matrix, column_space_basis, express_in_columns, hstack, inverse,
    kernel_basis, rank, solve,
)
from .algebra import (
    Algebra, Path, Representation, direct_sum_with_maps, dual_module,
    path_action, projective_module, zero_representation,
)


class AlgebraMismatchError(ValueError):
    """Operands live over different algebras."""


class InternalCheckError(RuntimeError):
    """An internal cross-check failed; indicates an implementation bug."""


def _same_algebra(*reps: Representation) -> Algebra:
    alg = reps[0].algebra
    for r in reps[1:]:
        if r.algebra is not alg:
            raise AlgebraMismatchError("representations are over different algebras")
    return alg


@dataclass(frozen=True)
class ModuleMap:
    """A homomorphism of representations: one matrix per vertex, of shape
    d'_v x d_v, satisfying the intertwining relations with every arrow.

    The intertwining equations are verified exactly at construction.
    """

    source: Representation
    target: Representation
    vertex_maps: tuple[Matrix, ...]

    def __post_init__(self):
        alg = _same_algebra(self.source, self.target)
        if len(self.vertex_maps) != alg.vertex_count:
            raise ValueError("one matrix per vertex required")
        for v, m in enumerate(self.vertex_maps):
            if (m.rows, m.cols) != (self.target.dims[v], self.source.dims[v]):
                raise ValueError(f"vertex {v}: matrix shape {m.rows}x{m.cols} does not match "
                                 f"{self.target.dims[v]}x{self.source.dims[v]}")
        for a, xs, xt in zip(alg.quiver.arrows, self.source.arrow_matrices,
                             self.target.arrow_matrices):
            lhs = self.vertex_maps[a.target] @ xs
            rhs = xt @ self.vertex_maps[a.source]
            if lhs.entries != rhs.entries:
                raise ValueError(f"map does not intertwine arrow {a.name}")

    @classmethod
    def _trusted(cls, source: Representation, target: Representation,
                 vertex_maps: tuple) -> "ModuleMap":
        # bypass the intertwining re-check for maps that are valid by
        # construction (composites, sums and scalings of valid maps)
        obj = object.__new__(cls)
        object.__setattr__(obj, "source", source)
        object.__setattr__(obj, "target", target)
        object.__setattr__(obj, "vertex_maps", vertex_maps)
        return obj

    @classmethod
    def identity(cls, rep: Representation) -> "ModuleMap":
        return cls._trusted(rep, rep, tuple(
            Matrix.identity(rep.algebra.field, d) for d in rep.dims))

    @classmethod
    def zero(cls, source: Representation, target: Representation) -> "ModuleMap":
        _same_algebra(source, target)
        fld = source.algebra.field
        return cls._trusted(source, target, tuple(
            Matrix.zeros(fld, target.dims[v], source.dims[v])
            for v in range(source.algebra.vertex_count)))

    def __matmul__(self, other: "ModuleMap") -> "ModuleMap":
        """Composition self after other."""
        if other.target != self.source:
            raise ValueError("composition source/target mismatch")
        return ModuleMap._trusted(other.source, self.target, tuple(
            a @ b for a, b in zip(self.vertex_maps, other.vertex_maps)))

    def __add__(self, other: "ModuleMap") -> "ModuleMap":
        if self.source != other.source or self.target != other.target:
            raise ValueError("sum of maps with different endpoints")
        return ModuleMap._trusted(self.source, self.target, tuple(
            a + b for a, b in zip(self.vertex_maps, other.vertex_maps)))

    def scale(self, c) -> "ModuleMap":
        return ModuleMap._trusted(self.source, self.target,
                                  tuple(m.scale(c) for m in self.vertex_maps))

    def flatten(self) -> tuple:
        return tuple(x for m in self.vertex_maps for x in m.entries)

    @property
    def is_zero(self) -> bool:
        return all(m.is_zero for m in self.vertex_maps)

    @property
    def is_injective(self) -> bool:
        return all(rank(m) == m.cols for m in self.vertex_maps)

    @property
    def is_surjective(self) -> bool:
        return all(rank(m) == m.rows for m in self.vertex_maps)

    @property
    def is_invertible(self) -> bool:
        return all(m.rows == m.cols and rank(m) == m.rows for m in self.vertex_maps)

    def inverse_map(self) -> "ModuleMap":
        invs = []
        for m in self.vertex_maps:
            mi = inverse(m)
            if mi is None:
                raise ValueError("map is not invertible")
            invs.append(mi)
        return ModuleMap._trusted(self.target, self.source, tuple(invs))


def hom_basis(source: Representation, target: Representation) -> list[ModuleMap]:
    """Canonical basis of Hom(source, target).

    Solves the intertwining system f_t X_a = X'_a f_s exactly; the basis is
    the canonical kernel basis of that system, hence deterministic.  Bases
    are memoized per algebra (they are immutable).
    """
    alg = _same_algebra(source, target)
    cached = alg._hom_memo.get((source, target))
    if cached is not None:
        return list(cached)
    fld = alg.field
    sizes = [target.dims[v] * source.dims[v] for v in range(alg.vertex_count)]
    offsets = [0]
    for s in sizes:
        offsets.append(offsets[-1] + s)
    unknowns = offsets[-1]
    rows: list[list] = []
    for a, xs, xt in zip(alg.quiver.arrows, source.arrow_matrices, target.arrow_matrices):
        s, t = a.source, a.target
        for r in range(target.dims[t]):
            for c in range(source.dims[s]):
                row = [fld.zero] * unknowns
                # (f_t X_a)[r, c] contributes f_t[r, k] * X_a[k, c]
                for k in range(source.dims[t]):
                    row[offsets[t] + r * source.dims[t] + k] = fld.add(
                        row[offsets[t] + r * source.dims[t] + k], xs.entry(k, c))
                # -(X'_a f_s)[r, c] contributes -X'_a[r, k] * f_s[k, c]
                for k in range(target.dims[s]):
                    idx = offsets[s] + k * source.dims[s] + c
                    row[idx] = fld.sub(row[idx], xt.entry(r, k))
                rows.append(row)
    system = Matrix.from_rows(fld, rows) if rows else Matrix.zeros(fld, 0, unknowns)
    maps = []
    for vec in kernel_basis(system):
        mats = []
        for v in range(alg.vertex_count):
            seg = vec[offsets[v]:offsets[v] + sizes[v]]
            mats.append(Matrix(fld, target.dims[v], source.dims[v], tuple(seg)))
        maps.append(ModuleMap(source, target, tuple(mats)))
    alg._hom_memo[(source, target)] = tuple(maps)
    return maps


def end_basis(rep: Representation) -> list[ModuleMap]:
    return hom_basis(rep, rep)


@dataclass(frozen=True)
class AddMembership:
    """Outcome of the trace test for membership in add(T).

    When positive, u_maps/v_maps are the components of a split witness
    through a finite power of T; assembled() builds the actual maps
    u: C -> T^n and v: T^n -> C with v after u the identity.
    """

    member: bool
    u_maps: tuple[ModuleMap, ...] = ()
    v_maps: tuple[ModuleMap, ...] = ()

    def assembled(self) -> tuple[ModuleMap, ModuleMap] | None:
        """The split maps through the explicit direct sum of the targets."""
        if not self.member or not self.u_maps:
            return None
        from .algebra import direct_sum_with_maps
        _, incls, projs = direct_sum_with_maps([u.target for u in self.u_maps])
        u_total = v_total = None
        for u, v, incl, proj in zip(self.u_maps, self.v_maps, incls, projs):
            u_piece = incl @ u
            v_piece = v @ proj
            u_total = u_piece if u_total is None else u_total + u_piece
            v_total = v_piece if v_total is None else v_total + v_piece
        return u_total, v_total

    def verify(self) -> bool:
        if not self.member:
            return True
        if not self.u_maps:
            return True  # the zero module splits through the empty sum
        u_total, v_total = self.assembled()
        ident = ModuleMap.identity(u_total.source)
        return (v_total @ u_total).flatten() == ident.flatten()


def in_add(candidate: Representation, t_module: Representation) -> AddMembership:
    """Is the candidate a direct summand of a finite sum of copies of T?

    Positive exactly when the identity of End(candidate) lies in the span of
    the composites v*u with u: C -> T and v: T -> C; the solving combination
    is returned as an explicit split witness.
    """
    return in_add_family(candidate, [t_module])


class _SpanTracker:
    """Incremental echelon row space with membership tests; rows are kept in
    pivot order, which is all forward reduction needs."""

    def __init__(self, field):
        self.field = field
        self.rows: list[tuple[int, list]] = []

    def reduce(self, vec: list) -> list:
        fld = self.field
        vec = list(vec)
        if fld.kind == "prime":
            p = fld.p
            for pc, row in self.rows:
                c = vec[pc]
                if c:
                    vec[pc:] = [(x - c * y) % p for x, y in zip(vec[pc:], row[pc:])]
        else:
            for pc, row in self.rows:
                c = vec[pc]
                if c != 0:
                    vec[pc:] = [fld.sub(x, fld.mul(c, y))
                                for x, y in zip(vec[pc:], row[pc:])]
        return vec

    def add(self, vec) -> bool:
        fld = self.field
        red = self.reduce(vec)
        pivot = next((j for j, x in enumerate(red) if x != 0), None)
        if pivot is None:
            return False
        inv = fld.inv(red[pivot])
        if inv != fld.one:
            red = [fld.mul(inv, x) for x in red]
        self.rows.append((pivot, red))
        self.rows.sort(key=lambda t: t[0])
        return True

    def contains(self, vec) -> bool:
        return all(x == 0 for x in self.reduce(vec))


def in_add_family(candidate: Representation,
                  parts: list[Representation]) -> AddMembership:
    """Membership of the candidate in add of a direct sum, computed without
    forming the sum: hom spaces into a sum are blockwise, so only composites
    through a single part can contribute to the identity.

    Composites are folded into an incremental span, keeping only the
    independent ones; the scan stops as soon as the identity lands in the
    span.
    """
    for part in parts:
        _same_algebra(candidate, part)
    if candidate.is_zero:
        return AddMembership(True)
    fld = candidate.algebra.field
    id_vec = list(ModuleMap.identity(candidate).flatten())
    span = _SpanTracker(fld)
    independent: list[tuple[ModuleMap, ModuleMap, tuple]] = []
    found = False
    for part in parts:
        if part.is_zero:
            continue
        us = hom_basis(candidate, part)
        vs = hom_basis(part, candidate)
        for u in us:
            for v in vs:
                flat = (v @ u).flatten()
                if span.add(flat):
                    independent.append((u, v, flat))
                    if span.contains(id_vec):
                        found = True
                        break
            if found:
                break
        if found:
            break
    if not found:
        return AddMembership(False)
    cols = [flat for _, _, flat in independent]
    system = Matrix.from_columns(fld, cols, nrows=len(id_vec))
    coeffs = solve(system, tuple(id_vec))
    if coeffs is None:
        raise InternalCheckError("identity left the span it was certified in")
    u_used, v_used = [], []
    for (u, v, _), c in zip(independent, coeffs):
        if c != 0:
            u_used.append(u)
            v_used.append(v.scale(c))
    result = AddMembership(True, tuple(u_used), tuple(v_used))
    if not result.verify():
        raise InternalCheckError("add-membership witness failed to recompose the identity")
    return result


@dataclass(frozen=True)
class IsoResult:
    status: str  # "iso" | "not_iso" | "undetermined"
    witness: ModuleMap | None = None
    reason: str | None = None

    @property
    def is_iso(self) -> bool:
        return self.status == "iso"


def _try_invertible(candidates, source, target) -> ModuleMap | None:
    for f in candidates:
        if f.is_invertible:
            return f
    return None


def is_isomorphic(m: Representation, n: Representation, *, seed: int = 0,
                  trials: int = 16, budget: int = 1 << 20) -> IsoResult:
    """Certified isomorphism test.

    Ladder: dimension vectors, basis homs and their pairwise sums, seeded
    random combinations, and finally full decomposition with indecomposable
    factor matching.  The random stage can only produce positives; when an
    isomorphism exists over GF(p), one random combination is singular with
    probability at most total_dim/p (Schwartz-Zippel on the determinant), so
    all `trials` draws miss with probability at most (total_dim/p)**trials.
    Between indecomposables an isomorphism exists exactly when some
    canonical hom-basis element is invertible, because the non-isomorphisms
    form a proper subspace.  Decompositions that cannot be certified make
    the answer "undetermined", never a guess.
    """
    _same_algebra(m, n)
    if m == n:
        return IsoResult("iso", ModuleMap.identity(m))
    if m.dims != n.dims:
        return IsoResult("not_iso", reason="dimension vectors differ")
    basis = hom_basis(m, n)
    found = _try_invertible(basis, m, n)
    if found is None:
        pair_sums = (basis[i] + basis[j] for i in range(len(basis))
                     for j in range(i + 1, len(basis)))
        found = _try_invertible(pair_sums, m, n)
    if found is None and basis:
        rng = random.Random(seed)
        fld = m.algebra.field
        def rand_scalar():
            if fld.kind == "prime":
                return rng.randrange(fld.p)
            return fld.coerce(rng.randint(-9, 9))
        for _ in range(trials):
            f = basis[0].scale(rand_scalar())
            for g in basis[1:]:
                f = f + g.scale(rand_scalar())
            if f.is_invertible:
                found = f
                break
    if found is not None:
        return IsoResult("iso", found)

    dm = decompose(m, seed=seed, budget=budget)
    dn = decompose(n, seed=seed, budget=budget)
    if not dm.determined or not dn.determined:
        return IsoResult("undetermined", reason="decomposition not certified")
    remaining = list(range(len(dn.copies)))
    matches: list[tuple[int, int, ModuleMap]] = []
    for i, (fac_m, _, _) in enumerate(dm.copies):
        hit = None
        for j in remaining:
            fac_n = dn.copies[j][0]
            if fac_m.dims != fac_n.dims:
                continue
            w = _try_invertible(hom_basis(fac_m, fac_n), fac_m, fac_n)
            if w is not None:
                hit = (j, w)
                break
        if hit is None:
            return IsoResult("not_iso", reason="indecomposable factor multiplicities differ")
        remaining.remove(hit[0])
        matches.append((i, hit[0], hit[1]))
    if remaining:
        return IsoResult("not_iso", reason="indecomposable factor multiplicities differ")
    witness = None
    for i, j, w in matches:
        piece = dn.copies[j][1] @ w @ dm.copies[i][2]  # incl_n . iso . proj_m
        witness = piece if witness is None else witness + piece
    if witness is None or not witness.is_invertible:
        raise InternalCheckError("assembled factor-wise isomorphism is not invertible")
    return IsoResult("iso", witness)


@dataclass(frozen=True)
class Decomposition:
    """Indecomposable factors with multiplicities plus per-copy split maps.

    copies holds (factor, inclusion, projection) for every indecomposable
    copy; factors groups them up to isomorphism.  determined is False when
    some leaf could not be certified indecomposable (tiny search budget or
    an infinite field); the partial split is still reported.
    """

    determined: bool
    factors: tuple[tuple[Representation, int], ...]
    copies: tuple[tuple[Representation, ModuleMap, ModuleMap], ...]
    reason: str | None = None


def _fitting_power(f: ModuleMap, total_dim: int) -> ModuleMap:
    power = f
    steps = 1
    while steps < total_dim:
        power = power @ power
        steps *= 2
    return power


def _split_along(rep, f_power):
    """Split rep as ker(f^d) + im(f^d); returns None when the split is trivial."""
    fld = rep.algebra.field
    alg = rep.algebra
    kcols, icols = [], []
    for v in range(alg.vertex_count):
        kb = kernel_basis(f_power.vertex_maps[v])
        kcols.append(Matrix.from_columns(fld, kb, nrows=rep.dims[v]))
        icols.append(column_space_basis(f_power.vertex_maps[v]))
    kdim = sum(m.cols for m in kcols)
    if kdim == 0 or kdim == rep.total_dim:
        return None
    parts = []
    for cols in (kcols, icols):
        dims = tuple(m.cols for m in cols)
        mats = []
        for a, x in zip(alg.quiver.arrows, rep.arrow_matrices):
            sub = express_in_columns(cols[a.target], x @ cols[a.source])
            if sub is None:
                raise InternalCheckError("Fitting part is not arrow-stable")
            mats.append(sub)
        part = Representation(alg, dims, tuple(mats))
        incl = ModuleMap(part, rep, tuple(cols))
        parts.append((part, incl))
    projs = []
    for v in range(alg.vertex_count):
        u = hstack([kcols[v], icols[v]])
        uinv = inverse(u)
        if uinv is None:
            raise InternalCheckError("Fitting decomposition does not span")
        kd = kcols[v].cols
        projs.append((
            Matrix.from_rows(fld, [uinv.row_list(i) for i in range(kd)])
            if kd else Matrix.zeros(fld, 0, rep.dims[v]),
            Matrix.from_rows(fld, [uinv.row_list(i) for i in range(kd, u.rows)])
            if u.rows - kd else Matrix.zeros(fld, 0, rep.dims[v]),
        ))
    (kpart, kincl), (ipart, iincl) = parts
    kproj = ModuleMap(rep, kpart, tuple(p[0] for p in projs))
    iproj = ModuleMap(rep, ipart, tuple(p[1] for p in projs))
    return (kpart, kincl, kproj), (ipart, iincl, iproj)


def _idempotent_search(rep, ends, budget):
    """Exhaustively look for a nontrivial idempotent endomorphism.

    Returns ("indecomposable", None) when the whole space holds none,
    ("split", g) when one is found, ("undetermined", None) when the field is
    infinite or the budget is exceeded.
    """
    fld = rep.algebra.field
    if fld.kind != "prime":
        return ("undetermined", None)
    if fld.p ** len(ends) > budget:
        return ("undetermined", None)
    ident = ModuleMap.identity(rep).flatten()
    for coeffs in itertools.product(range(fld.p), repeat=len(ends)):
        g = None
        for c, e in zip(coeffs, ends):
            if c:
                term = e.scale(c)
                g = term if g is None else g + term
        if g is None:
            continue
        flat = g.flatten()
        if flat == ident:
            continue
        if (g @ g).flatten() == flat:
            return ("split", g)
    return ("indecomposable", None)


def decompose(rep: Representation, *, seed: int = 0, budget: int = 1 << 20,
              trials: int = 16) -> Decomposition:
    """Fitting decomposition into indecomposables.

    Candidate endomorphisms are the canonical End basis, then pairwise sums,
    then seeded random combinations; each candidate f splits the module as
    ker f^d + im f^d.  A leaf is certified indecomposable when End is
    one-dimensional or an exhaustive idempotent search (possible only over a
    prime field within the budget) finds nothing; otherwise the result is
    flagged undetermined and carries the partial split.
    """
    leaves: list[tuple[Representation, ModuleMap, ModuleMap, bool]] = []
    rng = random.Random(seed)

    def recurse(part: Representation, incl: ModuleMap, proj: ModuleMap) -> None:
        if part.is_zero:
            return
        ends = end_basis(part)
        if len(ends) == 1:
            leaves.append((part, incl, proj, True))
            return
        candidates = list(ends)
        candidates.extend(ends[i] + ends[j] for i in range(len(ends))
                          for j in range(i + 1, len(ends)))
        fld = part.algebra.field
        for _ in range(trials):
            f = None
            for e in ends:
                c = rng.randrange(fld.p) if fld.kind == "prime" else fld.coerce(rng.randint(-9, 9))
                if c != 0:
                    term = e.scale(c)
                    f = term if f is None else f + term
            if f is not None:
                candidates.append(f)
        for f in candidates:
            split = _split_along(part, _fitting_power(f, part.total_dim))
            if split is not None:
                for sub, sincl, sproj in split:
                    recurse(sub, incl @ sincl, sproj @ proj)
                return
        verdict, idem = _idempotent_search(part, ends, budget)
        if verdict == "split":
            split = _split_along(part, _fitting_power(idem, part.total_dim))
            if split is None:
                raise InternalCheckError("nontrivial idempotent failed to split")
            for sub, sincl, sproj in split:
                recurse(sub, incl @ sincl, sproj @ proj)
            return
        leaves.append((part, incl, proj, verdict == "indecomposable"))

    recurse(rep, ModuleMap.identity(rep), ModuleMap.identity(rep))
    determined = all(ok for *_, ok in leaves)
    copies = tuple((p, i, pr) for p, i, pr, _ in leaves)
    factors: list[tuple[Representation, int]] = []
    if determined:
        for part, _, _, _ in leaves:
            for k, (fac, mult) in enumerate(factors):
                if part.dims == fac.dims and (
                        part == fac or _try_invertible(hom_basis(part, fac), part, fac)):
                    factors[k] = (fac, mult + 1)
                    break
            else:
                factors.append((part, 1))
    reason = None if determined else "some factor could not be certified indecomposable"
    return Decomposition(determined, tuple(factors), copies, reason)


def kernel(f: ModuleMap) -> tuple[Representation, ModuleMap]:
    """The kernel subrepresentation with its canonical inclusion."""
    alg = f.source.algebra
    fld = alg.field
    cols = [Matrix.from_columns(fld, kernel_basis(m), nrows=f.source.dims[v])
            for v, m in enumerate(f.vertex_maps)]
    dims = tuple(m.cols for m in cols)
    mats = []
    for a, x in zip(alg.quiver.arrows, f.source.arrow_matrices):
        sub = express_in_columns(cols[a.target], x @ cols[a.source])
        if sub is None:
            raise InternalCheckError("kernel is not arrow-stable")
        mats.append(sub)
    rep = Representation(alg, dims, tuple(mats))
    return rep, ModuleMap(rep, f.source, tuple(cols))


def image(f: ModuleMap) -> tuple[Representation, ModuleMap]:
    """The image subrepresentation of the target with its inclusion."""
    alg = f.target.algebra
    cols = [column_space_basis(m) for m in f.vertex_maps]
    dims = tuple(m.cols for m in cols)
    mats = []
    for a, x in zip(alg.quiver.arrows, f.target.arrow_matrices):
        sub = express_in_columns(cols[a.target], x @ cols[a.source])
        if sub is None:
            raise InternalCheckError("image is not arrow-stable")
        mats.append(sub)
    rep = Representation(alg, dims, tuple(mats))
    return rep, ModuleMap(rep, f.target, tuple(cols))


def cokernel(f: ModuleMap) -> tuple[Representation, ModuleMap]:
    """The cokernel with its canonical projection from the target."""
    alg = f.target.algebra
    fld = alg.field
    projs, sections, qdims = [], [], []
    for v in range(alg.vertex_count):
        b = column_space_basis(f.vertex_maps[v])
        d = f.target.dims[v]
        chosen = []
        cur = b
        for j in range(d):
            unit = [fld.zero] * d
            unit[j] = fld.one
            cand = hstack([cur, Matrix.from_columns(fld, [unit], nrows=d)])
            if rank(cand) > cur.cols:
                chosen.append(j)
                cur = cand
        q = len(chosen)
        qdims.append(q)
        section = Matrix.from_columns(
            fld, [[fld.one if i == j else fld.zero for i in range(d)] for j in chosen], nrows=d)
        u = hstack([b, section])
        uinv = inverse(u)
        if uinv is None:
            raise InternalCheckError("cokernel completion is singular")
        proj = (Matrix.from_rows(fld, [uinv.row_list(i) for i in range(b.cols, d)])
                if q else Matrix.zeros(fld, 0, d))
        projs.append(proj)
        sections.append(section)
    mats = []
    for a, x in zip(alg.quiver.arrows, f.target.arrow_matrices):
        induced = projs[a.target] @ x @ sections[a.source]
        # well-definedness: arrows must send the image into the image
        if not (projs[a.target] @ x @ column_space_basis(f.vertex_maps[a.source])).is_zero:
            raise InternalCheckError("cokernel is not well defined")
        mats.append(induced)
    rep = Representation(alg, tuple(qdims), tuple(mats))
    return rep, ModuleMap(f.target, rep, tuple(projs))


def radical(rep: Representation) -> tuple[Representation, ModuleMap]:
    """rad M: at each vertex the sum of the images of the incoming arrows."""
    alg = rep.algebra
    fld = alg.field
    cols = []
    for v in range(alg.vertex_count):
        incoming = [rep.arrow_matrices[ai] for ai, a in enumerate(alg.quiver.arrows)
                    if a.target == v and rep.dims[a.source] > 0]
        if incoming and rep.dims[v] > 0:
            cols.append(column_space_basis(hstack(incoming)))
        else:
            cols.append(Matrix.zeros(fld, rep.dims[v], 0))
    dims = tuple(m.cols for m in cols)
    mats = []
    for a, x in zip(alg.quiver.arrows, rep.arrow_matrices):
        sub = express_in_columns(cols[a.target], x @ cols[a.source])
        if sub is None:
            raise InternalCheckError("radical is not arrow-stable")
        mats.append(sub)
    sub_rep = Representation(alg, dims, tuple(mats))
    return sub_rep, ModuleMap(sub_rep, rep, tuple(cols))


def top_multiplicities(rep: Representation) -> tuple[int, ...]:
    """Multiplicity of each simple in M / rad M."""
    rad, _ = radical(rep)
    return tuple(d - r for d, r in zip(rep.dims, rad.dims))


@dataclass(frozen=True)
class ProjectiveBundle:
    """A sum of indecomposable projectives with bookkeeping for its
    generators: summands lists (vertex, copy); vertex_labels[v] lists
    (summand index, basis path) for each coordinate of the sum at v;
    generator_coords[s] locates the trivial-path generator of summand s."""

    rep: Representation
    summands: tuple[tuple[int, int], ...]
    vertex_labels: tuple[tuple[tuple[int, Path], ...], ...]
    generator_coords: tuple[tuple[int, int], ...]


def projective_bundle(algebra: Algebra, multiplicities: tuple[int, ...]) -> ProjectiveBundle:
    summands = tuple((v, c) for v in range(algebra.vertex_count)
                     for c in range(multiplicities[v]))
    parts = [projective_module(algebra, v) for v, _ in summands]
    if parts:
        rep, _, _ = direct_sum_with_maps(parts)
    else:
        rep = zero_representation(algebra)
    labels: list[list[tuple[int, Path]]] = [[] for _ in range(algebra.vertex_count)]
    gens: list[tuple[int, int]] = []
    offsets = [0] * algebra.vertex_count
    for s, (pv, _) in enumerate(summands):
        for v in range(algebra.vertex_count):
            block = algebra.basis_by_block.get((pv, v), ())
            for bidx in block:
                labels[v].append((s, algebra.basis[bidx]))
        gens.append((pv, offsets[pv]))  # trivial path is first in its block
        for v in range(algebra.vertex_count):
            offsets[v] += len(algebra.basis_by_block.get((pv, v), ()))
    return ProjectiveBundle(rep, summands,
                            tuple(tuple(l) for l in labels), tuple(gens))


@dataclass(frozen=True)
class CoverResult:
    projective: Representation
    cover: ModuleMap
    bundle: ProjectiveBundle


def projective_cover(rep: Representation) -> CoverResult:
    """The minimal projective cover P -> M.

    P is the sum of P(i) with the top multiplicities of M; the map lifts the
    canonical basis of M / rad M (first unit vectors completing rad M in
    coordinate order).  Surjectivity and minimality (kernel inside rad P)
    are verified before returning.
    """
    alg = rep.algebra
    fld = alg.field
    rad_rep, rad_incl = radical(rep)
    tops = tuple(d - r for d, r in zip(rep.dims, rad_rep.dims))
    bundle = projective_bundle(alg, tops)
    # canonical lifts of the top basis
    lifts: dict[int, list[tuple]] = {}
    for v in range(alg.vertex_count):
        chosen: list[tuple] = []
        cur = rad_incl.vertex_maps[v]
        d = rep.dims[v]
        for j in range(d):
            if len(chosen) == tops[v]:
                break
            unit = [fld.zero] * d
            unit[j] = fld.one
            cand = hstack([cur, Matrix.from_columns(fld, [unit], nrows=d)])
            if rank(cand) > cur.cols:
                chosen.append(tuple(unit))
                cur = cand
        lifts[v] = chosen
    # assemble the cover vertexwise from path actions on the lifted generators
    action_cache: dict[Path, Matrix] = {}
    def act(path: Path) -> Matrix:
        m = action_cache.get(path)
        if m is None:
            m = action_cache[path] = path_action(rep, path)
        return m
    copy_counter: dict[int, int] = {}
    gen_vectors: list[tuple] = []
    for (pv, _) in bundle.summands:
        c = copy_counter.get(pv, 0)
        copy_counter[pv] = c + 1
        gen_vectors.append(lifts[pv][c])
    mats = []
    for v in range(alg.vertex_count):
        cols = []
        for (s, path) in bundle.vertex_labels[v]:
            cols.append(act(path).apply(gen_vectors[s]))
        mats.append(Matrix.from_columns(fld, cols, nrows=rep.dims[v]))
    cover = ModuleMap(bundle.rep, rep, tuple(mats))
    if not cover.is_surjective:
        raise InternalCheckError("projective cover is not surjective")
    # minimality: kernel of the cover lies in rad P, checked vertexwise
    prad, prad_incl = radical(bundle.rep)
    for v in range(alg.vertex_count):
        kb = kernel_basis(cover.vertex_maps[v])
        if not kb:
            continue
        combined = hstack([prad_incl.vertex_maps[v],
                           Matrix.from_columns(fld, kb, nrows=bundle.rep.dims[v])])
        if rank(combined) != prad.dims[v]:
            raise InternalCheckError("projective cover is not minimal")
    return CoverResult(bundle.rep, cover, bundle)


def syzygy(rep: Representation, m: int) -> Representation:
    """The m-th syzygy along minimal projective covers (m = 0 gives M back)."""
    if m < 0:
        raise ValueError("syzygy exponent must be >= 0")
    cur = rep
    for _ in range(m):
        if cur.is_zero:
            return cur
        cov = projective_cover(cur)
        cur, _ = kernel(cov.cover)
    return cur


def cosyzygy(rep: Representation, m: int) -> Representation:
    """The m-th cosyzygy, computed by duality through the opposite algebra."""
    return dual_module(syzygy(dual_module(rep), m))

"""Minimal projective resolutions, Ext tables and certified vanishing.

Every Ext dimension is computed twice, by two independent routes:

* cohomology of the complex Hom(P_*, N), using the vertexwise identification
  Hom(P(i), N) = N_i through the resolution's generator bookkeeping;
* the stable-hom formula dim Hom(syzygy, N) minus the rank of restriction
  from Hom(P_{k-1}, N).

A disagreement raises InternalCheckError, it is never suppressed.  Claims
about all sufficiently large degrees are made only under a certificate: a
terminated resolution or a verified syzygy periodicity.  Cutoffs alone never
turn into "for all large degrees" statements.

Resolutions are memoized per algebra and extended incrementally; setting the
environment variable EXTBOUND_CACHE_DIR additionally persists them to disk.
"""

from __future__ import annotations

import hashlib
import json
import os
import threading
from dataclasses import dataclass

from .exactla import Matrix, rank
from .algebra import Algebra, Path, Representation, dual_module, path_action, regular_module
from .modules import (
    CoverResult, InternalCheckError, ModuleMap, ProjectiveBundle, hom_basis,
    is_isomorphic, kernel, projective_bundle, projective_cover,
)


class MinimalResolution:
    """An incrementally extendable minimal projective resolution.

    After extend(k) the terms P_0..P_k, the syzygies up to index k+1 and the
    differentials d_1..d_k are available (or the resolution has terminated
    earlier).  Extension is guarded by a lock; published data is immutable.
    """

    def __init__(self, module: Representation):
        self.module = module
        self.algebra = module.algebra
        self.syzygies: list[Representation] = [module]
        self.covers: list[CoverResult] = []
        self.inclusions: list[ModuleMap] = []  # syzygy k+1 into P_k
        self._differentials: dict[int, ModuleMap] = {}
        self._periodicity_searched = -1
        self._periodicity: "PeriodicityCertificate | None" = None
        self._lock = threading.Lock()

    @property
    def length(self) -> int:
        return len(self.covers) - 1

    @property
    def terminated_at(self) -> int | None:
        """Least k with syzygy k equal to zero, when reached."""
        for k, s in enumerate(self.syzygies):
            if s.is_zero:
                return k
        return None

    @property
    def terminated(self) -> bool:
        return self.terminated_at is not None

    def extend(self, upto: int) -> None:
        with self._lock:
            changed = False
            while len(self.covers) <= upto:
                current = self.syzygies[len(self.covers)]
                if current.is_zero:
                    break  # terminated; all later terms are zero
                cov = projective_cover(current)
                self.covers.append(cov)
                syz, incl = kernel(cov.cover)
                self.syzygies.append(syz)
                self.inclusions.append(incl)
                changed = True
            if changed:
                _disk_cache_store(self)

    def multiplicities(self, k: int) -> tuple[int, ...]:
        if k < len(self.covers):
            mult = [0] * self.algebra.vertex_count
            for v, _ in self.covers[k].bundle.summands:
                mult[v] += 1
            return tuple(mult)
        return (0,) * self.algebra.vertex_count

    def bundle(self, k: int) -> ProjectiveBundle:
        if k < len(self.covers):
            return self.covers[k].bundle
        return projective_bundle(self.algebra, (0,) * self.algebra.vertex_count)

    def syzygy(self, k: int) -> Representation:
        if k < len(self.syzygies):
            return self.syzygies[k]
        from .algebra import zero_representation
        return zero_representation(self.algebra)

    def differential(self, k: int) -> ModuleMap:
        """d_k: P_k -> P_{k-1}, the cover of syzygy k followed by inclusion."""
        if k < 1 or k >= len(self.covers):
            raise ValueError(f"differential {k} not computed")
        d = self._differentials.get(k)
        if d is None:
            d = self._differentials[k] = self.inclusions[k - 1] @ self.covers[k].cover
        return d


def minimal_resolution(module: Representation, cutoff: int) -> MinimalResolution:
    """Memoized minimal resolution of the module, extended through cutoff."""
    memo = module.algebra._resolution_memo
    res = memo.get(module)
    if res is None:
        res = _disk_cache_load(module)
        if res is None:
            res = MinimalResolution(module)
        memo[module] = res
    res.extend(cutoff)
    return res


# ----- optional on-disk memo store ------------------------------------------

def _cache_dir() -> str | None:
    return os.environ.get("EXTBOUND_CACHE_DIR") or None


def _module_cache_key(module: Representation) -> str:
    payload = {
        "algebra": repr(module.algebra.presentation.canonical_key()),
        "dims": list(module.dims),
        "matrices": [[module.algebra.field.fmt(x) for x in m.entries]
                     for m in module.arrow_matrices],
    }
    digest = hashlib.sha256(json.dumps(payload, sort_keys=True).encode()).hexdigest()
    return digest[:24]


def _matrix_payload(m: Matrix) -> dict:
    fld = m.field
    return {"rows": m.rows, "cols": m.cols, "entries": [fld.fmt(x) for x in m.entries]}


def _matrix_from_payload(fld, data) -> Matrix:
    return Matrix(fld, data["rows"], data["cols"],
                  tuple(fld.coerce(x) for x in data["entries"]))


def _disk_cache_store(res: MinimalResolution) -> None:
    root = _cache_dir()
    if root is None:
        return
    os.makedirs(root, exist_ok=True)
    steps = []
    for k, cov in enumerate(res.covers):
        steps.append({
            "multiplicities": list(res.multiplicities(k)),
            "cover": [_matrix_payload(m) for m in cov.cover.vertex_maps],
            "syzygy_dims": list(res.syzygies[k + 1].dims),
            "syzygy_matrices": [_matrix_payload(m)
                                for m in res.syzygies[k + 1].arrow_matrices],
            "inclusion": [_matrix_payload(m) for m in res.inclusions[k].vertex_maps],
        })
    path = os.path.join(root, _module_cache_key(res.module) + ".json")
    with open(path, "w") as fh:
        json.dump({"schema_version": "1", "steps": steps}, fh, sort_keys=True)


def _disk_cache_load(module: Representation) -> MinimalResolution | None:
    root = _cache_dir()
    if root is None:
        return None
    path = os.path.join(root, _module_cache_key(module) + ".json")
    if not os.path.exists(path):
        return None
    try:
        with open(path) as fh:
            data = json.load(fh)
        alg = module.algebra
        fld = alg.field
        res = MinimalResolution(module)
        for step in data["steps"]:
            bundle = projective_bundle(alg, tuple(step["multiplicities"]))
            cover = ModuleMap(bundle.rep, res.syzygies[len(res.covers)],
                              tuple(_matrix_from_payload(fld, m) for m in step["cover"]))
            syz = Representation(alg, tuple(step["syzygy_dims"]),
                                 tuple(_matrix_from_payload(fld, m)
                                       for m in step["syzygy_matrices"]))
            incl = ModuleMap(syz, bundle.rep,
                             tuple(_matrix_from_payload(fld, m) for m in step["inclusion"]))
            res.covers.append(CoverResult(bundle.rep, cover, bundle))
            res.syzygies.append(syz)
            res.inclusions.append(incl)
        return res
    except (ValueError, KeyError, OSError):
        return None  # stale or corrupt cache entries are simply recomputed


# ----- Ext tables ------------------------------------------------------------


@dataclass(frozen=True)
class ExtTable:
    """dims[i] = dim Ext^i(M, N) for 0 <= i <= cutoff."""

    dims: tuple[int, ...]
    cutoff: int

    def to_json(self) -> dict:
        return {"dims": list(self.dims), "cutoff": self.cutoff}

    def to_csv(self) -> str:
        lines = ["degree,dim"]
        lines.extend(f"{i},{d}" for i, d in enumerate(self.dims))
        return "\n".join(lines) + "\n"


def _path_operator_cache(n_mod: Representation):
    cache: dict[Path, Matrix] = {}

    def op(path: Path) -> Matrix:
        m = cache.get(path)
        if m is None:
            m = cache[path] = path_action(n_mod, path)
        return m
    return op


def _hom_from_generators(bundle: ProjectiveBundle, n_mod: Representation,
                         gen_values: list[tuple], op) -> ModuleMap:
    """The hom P -> N determined by a value in N_{vertex(s)} per generator s."""
    alg = bundle.rep.algebra
    fld = alg.field
    mats = []
    for v in range(alg.vertex_count):
        cols = [op(path).apply(gen_values[s]) for s, path in bundle.vertex_labels[v]]
        mats.append(Matrix.from_columns(fld, cols, nrows=n_mod.dims[v]))
    return ModuleMap(bundle.rep, n_mod, tuple(mats))


def _hom_space_basis(bundle: ProjectiveBundle, n_mod: Representation, op) -> list[ModuleMap]:
    fld = n_mod.algebra.field
    out = []
    for s, (v, _) in enumerate(bundle.summands):
        for e in range(n_mod.dims[v]):
            values = []
            for t, (w, _) in enumerate(bundle.summands):
                vec = [fld.zero] * n_mod.dims[w]
                if t == s:
                    vec[e] = fld.one
                values.append(tuple(vec))
            out.append(_hom_from_generators(bundle, n_mod, values, op))
    return out


def _induced_matrix(res: MinimalResolution, n_mod: Representation, k: int, op) -> Matrix:
    """Matrix of precomposition with d_k: Hom(P_{k-1}, N) -> Hom(P_k, N)."""
    alg = res.algebra
    fld = alg.field
    dom = res.bundle(k - 1)
    cod = res.bundle(k)
    dom_sizes = [n_mod.dims[v] for v, _ in dom.summands]
    cod_sizes = [n_mod.dims[v] for v, _ in cod.summands]
    dom_off = [0]
    for s in dom_sizes:
        dom_off.append(dom_off[-1] + s)
    cod_off = [0]
    for s in cod_sizes:
        cod_off.append(cod_off[-1] + s)
    rows = [[fld.zero] * dom_off[-1] for _ in range(cod_off[-1])]
    if k < 1 or k >= len(res.covers) or cod_off[-1] == 0 or dom_off[-1] == 0:
        return Matrix.from_rows(fld, rows) if rows else Matrix.zeros(fld, 0, dom_off[-1])
    diff = res.differential(k)
    for s, (vs, _) in enumerate(cod.summands):
        gi = cod.generator_coords[s][1]
        column = diff.vertex_maps[vs].column(gi)
        for coord, coef in enumerate(column):
            if coef == 0:
                continue
            t, path = dom.vertex_labels[vs][coord]
            block = op(path)  # N_{source summand vertex} -> N_{vs}
            for r in range(block.rows):
                for c in range(block.cols):
                    val = block.entry(r, c)
                    if val != 0:
                        rows[cod_off[s] + r][dom_off[t] + c] = fld.add(
                            rows[cod_off[s] + r][dom_off[t] + c], fld.mul(coef, val))
    return Matrix.from_rows(fld, rows) if rows else Matrix.zeros(fld, 0, dom_off[-1])


def ext_dims_via_complex(m_mod: Representation, n_mod: Representation,
                         cutoff: int) -> list[int]:
    """Ext dimensions as cohomology of Hom(P_*, N)."""
    res = minimal_resolution(m_mod, cutoff + 1)
    op = _path_operator_cache(n_mod)
    space = [sum(mult * n_mod.dims[v] for v, mult in enumerate(res.multiplicities(k)))
             for k in range(cutoff + 2)]
    ranks = [0] * (cutoff + 2)
    for k in range(1, cutoff + 2):
        if space[k] == 0 or space[k - 1] == 0:
            ranks[k] = 0
        else:
            ranks[k] = rank(_induced_matrix(res, n_mod, k, op))
    dims = []
    for i in range(cutoff + 1):
        d = space[i] - ranks[i + 1] - (ranks[i] if i >= 1 else 0)
        if d < 0:
            raise InternalCheckError("negative cohomology dimension")
        dims.append(d)
    return dims


def ext_dims_via_stable(m_mod: Representation, n_mod: Representation,
                        cutoff: int) -> list[int]:
    """Ext dimensions from hom spaces of syzygies modulo maps factoring
    through the covering projective."""
    res = minimal_resolution(m_mod, cutoff)
    op = _path_operator_cache(n_mod)
    dims = [len(hom_basis(m_mod, n_mod))]
    for i in range(1, cutoff + 1):
        syz = res.syzygy(i)
        if syz.is_zero:
            dims.append(0)
            continue
        full = len(hom_basis(syz, n_mod))
        incl = res.inclusions[i - 1]
        proj_homs = _hom_space_basis(res.bundle(i - 1), n_mod, op)
        if proj_homs:
            restricted = Matrix.from_rows(
                n_mod.algebra.field, [(h @ incl).flatten() for h in proj_homs])
            factoring = rank(restricted)
        else:
            factoring = 0
        dims.append(full - factoring)
    return dims


def ext_table(m_mod: Representation, n_mod: Representation, cutoff: int) -> ExtTable:
    """dim Ext^i(M, N) for i <= cutoff, cross-checked between the two
    independent computations; a mismatch is a hard internal error."""
    if m_mod.algebra is not n_mod.algebra:
        from .modules import AlgebraMismatchError
        raise AlgebraMismatchError("ext_table arguments over different algebras")
    memo = m_mod.algebra._ext_memo
    hit = memo.get((m_mod, n_mod))
    if hit is not None and hit[0] >= cutoff:
        return ExtTable(tuple(hit[1][:cutoff + 1]), cutoff)
    via_complex = ext_dims_via_complex(m_mod, n_mod, cutoff)
    via_stable = ext_dims_via_stable(m_mod, n_mod, cutoff)
    if via_complex != via_stable:
        raise InternalCheckError(
            f"Ext oracle disagreement: complex {via_complex} vs stable {via_stable}")
    memo[(m_mod, n_mod)] = (cutoff, via_complex)
    return ExtTable(tuple(via_complex), cutoff)


# ----- projective/injective dimension and periodicity ------------------------


@dataclass(frozen=True)
class PdFinite:
    value: int
    kind: str = "finite"

    def to_json(self) -> dict:
        return {"kind": "finite", "value": self.value}


@dataclass(frozen=True)
class PdPeriodic:
    preperiod: int
    period: int
    certificate: "PeriodicityCertificate"
    kind: str = "periodic_infinite"

    def to_json(self) -> dict:
        return {"kind": "periodic_infinite", "preperiod": self.preperiod,
                "period": self.period}


@dataclass(frozen=True)
class PdAtLeast:
    cutoff: int
    kind: str = "at_least"

    def to_json(self) -> dict:
        return {"kind": "at_least", "cutoff": self.cutoff}


PdResult = PdFinite | PdPeriodic | PdAtLeast


@dataclass(frozen=True)
class PeriodicityCertificate:
    """A verified isomorphism between syzygy preperiod and preperiod+period.

    It forces every Ext table against the module to repeat with the given
    period beyond the preperiod, which is what makes eventual vanishing
    decidable.
    """

    preperiod: int
    period: int
    witness: ModuleMap
    undetermined_pairs: tuple[tuple[int, int], ...] = ()

    def verify(self) -> bool:
        w = self.witness
        if not w.is_invertible:
            return False
        alg = w.source.algebra
        for a, xs, xt in zip(alg.quiver.arrows, w.source.arrow_matrices,
                             w.target.arrow_matrices):
            if (w.vertex_maps[a.target] @ xs).entries != \
               (xt @ w.vertex_maps[a.source]).entries:
                return False
        return True

    def to_json(self) -> dict:
        return {"preperiod": self.preperiod, "period": self.period,
                "witness_dims": list(self.witness.source.dims)}


def periodicity_certificate(module: Representation, cutoff: int,
                            *, seed: int = 0) -> PeriodicityCertificate | None:
    """First certified syzygy recurrence in lexicographic (preperiod, period)
    order, or None (terminated resolutions never count as periodic)."""
    if cutoff < 1:
        raise ValueError("cutoff must be >= 1")
    res = minimal_resolution(module, cutoff)
    cached = res._periodicity
    if cached is not None and cached.preperiod + cached.period <= cutoff:
        return cached
    if res.terminated:
        return None
    if cached is None and res._periodicity_searched >= cutoff:
        return None
    skipped: list[tuple[int, int]] = []
    for a in range(cutoff):
        for b in range(a + 1, cutoff + 1):
            sa, sb = res.syzygy(a), res.syzygy(b)
            if sa.is_zero or sa.dims != sb.dims:
                continue
            iso = is_isomorphic(sa, sb, seed=seed)
            if iso.status == "iso":
                cert = PeriodicityCertificate(a, b - a, iso.witness, tuple(skipped))
                res._periodicity = cert
                return cert
            if iso.status == "undetermined":
                skipped.append((a, b))
    res._periodicity_searched = cutoff
    return None


def projective_dimension(module: Representation, cutoff: int) -> PdResult:
    """Finite(m) from a terminated resolution, PeriodicInfinite from a
    certified syzygy recurrence, otherwise AtLeast(cutoff).

    The zero module reports Finite(-1)."""
    if cutoff < 1:
        raise ValueError("cutoff must be >= 1")
    res = minimal_resolution(module, cutoff + 1)
    t = res.terminated_at
    if t is not None and t - 1 <= cutoff:
        return PdFinite(t - 1)
    cert = periodicity_certificate(module, cutoff)
    if cert is not None:
        return PdPeriodic(cert.preperiod, cert.period, cert)
    return PdAtLeast(cutoff)


def injective_dimension(module: Representation, cutoff: int) -> PdResult:
    """Computed as the projective dimension of the dual over the opposite."""
    return projective_dimension(dual_module(module), cutoff)


# ----- certified vanishing onsets --------------------------------------------


@dataclass(frozen=True)
class OnsetEvidence:
    kind: str  # "terminated" | "periodic" | "none"
    pd_value: int | None = None
    certificate: PeriodicityCertificate | None = None

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.pd_value is not None:
            out["pd"] = self.pd_value
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json()
        return out


@dataclass(frozen=True)
class OnsetResult:
    """Certified decision about eventual vanishing of Ext^i(M, N).

    status "vanishes" with onset t means Ext^i = 0 for every i > t, with
    Ext^t nonzero or t = 0; "never_vanishes" means some degree class stays
    nonzero forever; "undetermined" reports the inspected window only.
    """

    status: str  # "vanishes" | "never_vanishes" | "undetermined"
    onset: int | None
    cutoff: int
    window: tuple[int, ...]
    evidence: OnsetEvidence

    @property
    def certified(self) -> bool:
        return self.status != "undetermined"

    def to_json(self) -> dict:
        return {"status": {"vanishes": "certified_vanishes",
                           "never_vanishes": "certified_never_vanishes",
                           "undetermined": "undetermined"}[self.status],
                "onset": self.onset, "cutoff": self.cutoff,
                "window": list(self.window), "evidence": self.evidence.to_json()}


def _last_nonzero_positive(dims, upto: int) -> int:
    onset = 0
    for i in range(1, min(upto, len(dims) - 1) + 1):
        if dims[i] != 0:
            onset = i
    return onset


def vanishing_onset(m_mod: Representation, n_mod: Representation,
                    cutoff: int) -> OnsetResult:
    """Decide from which degree Ext^i(M, N) vanishes forever.

    Decisions come only from certificates: a terminated resolution bounds
    everything, a periodicity certificate reduces the infinite tail to one
    period window.  Anything else is reported undetermined at the cutoff.
    """
    pd_res = projective_dimension(m_mod, cutoff)
    if isinstance(pd_res, PdFinite):
        depth = max(pd_res.value, 0)
        dims = ext_table(m_mod, n_mod, depth).dims
        onset = _last_nonzero_positive(dims, depth)
        return OnsetResult("vanishes", onset, cutoff, dims,
                           OnsetEvidence("terminated", pd_value=pd_res.value))
    if isinstance(pd_res, PdPeriodic):
        a, q = pd_res.preperiod, pd_res.period
        dims = ext_table(m_mod, n_mod, a + q).dims
        if all(dims[i] == 0 for i in range(a + 1, a + q + 1)):
            onset = _last_nonzero_positive(dims, a)
            return OnsetResult("vanishes", onset, cutoff, dims,
                               OnsetEvidence("periodic", certificate=pd_res.certificate))
        return OnsetResult("never_vanishes", None, cutoff, dims,
                           OnsetEvidence("periodic", certificate=pd_res.certificate))
    dims = ext_table(m_mod, n_mod, cutoff).dims
    return OnsetResult("undetermined", None, cutoff, dims, OnsetEvidence("none"))


def onset_against_regular(m_mod: Representation, cutoff: int) -> OnsetResult:
    """Vanishing onset of Ext^i(M, A) against the regular module."""
    return vanishing_onset(m_mod, regular_module(m_mod.algebra), cutoff)

"""Parafermion stabilizer codes: validation, parameters, logicals, syndromes.

A code is a list of generators in PF(D, 2n).  Validity means the generators
pairwise commute, each preserves parity (charge zero), and the generated
group contains no nontrivial phase multiple of the identity.  The last
condition reduces to two finite checks: every generator to the D-th power
must be the exact identity, and every multiplicative relation between the
exponent rows (an element of the left kernel of the row matrix) must lift
to a phase-free product.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .algebra import PfOperator, lambda_matrix
from .zmod import (
    ZModMatrix,
    _howell_basis,
    _reduce_against,
    coset_minimum,
    howell_form,
    kernel_basis,
    solve_left,
    span_order,
)

__all__ = [
    "PfCode",
    "ValidationFlags",
    "DistanceResult",
    "LconResult",
    "CodeReport",
    "InvalidCodeError",
    "PhaseAssignmentError",
    "validate",
    "group_order",
    "codespace_dim",
    "centralizer_basis",
    "logical_basis",
    "is_logical",
    "distance",
    "l_con",
    "syndrome",
    "canonical_phases",
    "stabilizer_matrix",
    "commutation_rows",
    "support_diameter",
    "analyze",
]

FULL_SEARCH_MODE_LIMIT = 20


class InvalidCodeError(ValueError):
    """The operation requires a code whose validation flags are all true."""


class PhaseAssignmentError(ValueError):
    """No phase assignment can make the generator set a valid stabilizer group."""


@dataclass(frozen=True)
class PfCode:
    """A stabilizer group in PF(D, 2n), given by its generating set.

    ``mode_layout`` optionally maps 1-indexed modes to integer lattice
    coordinates; when absent, modes sit on the 1-D chain i -> (i,).
    """

    modulus: int
    num_modes: int
    generators: tuple[PfOperator, ...]
    mode_layout: dict[int, tuple[int, ...]] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "generators", tuple(self.generators))
        for g in self.generators:
            if g.modulus != self.modulus or g.num_modes != self.num_modes:
                raise ValueError("generator does not match the code's modulus or mode count")
        if self.num_modes < 2 or self.num_modes % 2:
            raise ValueError("num_modes must be even and >= 2")
        if self.mode_layout is not None:
            if set(self.mode_layout) != set(range(1, self.num_modes + 1)):
                raise ValueError("mode_layout must cover modes 1..num_modes")
            dims = {len(c) for c in self.mode_layout.values()}
            if len(dims) != 1:
                raise ValueError("mode_layout coordinates must share one dimension")

    @property
    def n(self) -> int:
        return self.num_modes // 2

    def with_generators(self, generators) -> "PfCode":
        return PfCode(self.modulus, self.num_modes, tuple(generators), self.mode_layout)


@dataclass(frozen=True)
class ValidationFlags:
    abelian: bool
    parity_ok: bool
    phase_ok: bool

    @property
    def all_ok(self) -> bool:
        return self.abelian and self.parity_ok and self.phase_ok

    def to_dict(self) -> dict:
        return {"abelian": self.abelian, "parity_ok": self.parity_ok, "phase_ok": self.phase_ok}


@dataclass(frozen=True)
class DistanceResult:
    """Minimum logical weight; ``value`` is None when the search hit the cap."""

    value: int | None
    cap: int
    certificate: PfOperator | None

    @property
    def exact(self) -> bool:
        return self.value is not None

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "cap": self.cap,
            "certificate": str(self.certificate) if self.certificate else None,
        }


@dataclass(frozen=True)
class LconResult:
    """Minimum layout diameter of a parity-preserving logical; None if none exists."""

    value: int | None
    certificate: PfOperator | None

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "certificate": str(self.certificate) if self.certificate else None,
        }


def stabilizer_matrix(code: PfCode) -> ZModMatrix:
    """Exponent rows of the generators as a matrix over Z_D."""
    if not code.generators:
        return ZModMatrix.zeros(code.modulus, 0, code.num_modes)
    return ZModMatrix(code.modulus, np.array([g.alpha for g in code.generators], dtype=np.int64))


def commutation_rows(code: PfCode) -> np.ndarray:
    """Rows S @ L mod D: the syndrome of x is (S @ L) @ x."""
    smat = stabilizer_matrix(code).array
    lam = lambda_matrix(code.modulus, code.num_modes).array
    return (smat @ lam) % code.modulus


def _phase_free_product(code: PfCode, multiplicities) -> PfOperator:
    out = PfOperator.identity(code.modulus, code.num_modes)
    for g, m in zip(code.generators, multiplicities):
        out = out * g.power(int(m))
    return out


def validate(code: PfCode) -> ValidationFlags:
    """Check the three defining conditions; never raises."""
    gens = code.generators
    abelian = all(
        gens[i].commutation_exponent(gens[j]) == 0
        for i in range(len(gens))
        for j in range(i + 1, len(gens))
    )
    parity_ok = all(g.charge() == 0 for g in gens)
    phase_ok = all(g.power(code.modulus).is_identity() for g in gens)
    if phase_ok and gens:
        for row in kernel_basis(stabilizer_matrix(code)).array:
            if not _phase_free_product(code, row).is_identity():
                phase_ok = False
                break
    return ValidationFlags(abelian, parity_ok, phase_ok)


def _require_valid(code: PfCode) -> None:
    flags = validate(code)
    if not flags.all_ok:
        raise InvalidCodeError(f"code fails validation: {flags.to_dict()}")


def group_order(code: PfCode) -> int:
    """|S|: the number of distinct group elements (phases are pinned once valid)."""
    _require_valid(code)
    return span_order(stabilizer_matrix(code))


def codespace_dim(code: PfCode) -> int:
    """|C_S| = D^n / |S|, always an exact integer division for a valid code."""
    order = group_order(code)
    total = code.modulus**code.n
    if total % order:
        raise InvalidCodeError(f"D^n = {total} is not divisible by |S| = {order}")
    return total // order


def centralizer_basis(code: PfCode) -> ZModMatrix:
    """Basis of {x : S L x^T == 0 (mod D)}, the exponent space of the centralizer."""
    _require_valid(code)
    rows = commutation_rows(code)
    return kernel_basis(ZModMatrix(code.modulus, rows.T % code.modulus))


def syndrome(code: PfCode, error: PfOperator) -> tuple[int, ...]:
    """Commutation exponent of each generator with the error operator."""
    if error.modulus != code.modulus or error.num_modes != code.num_modes:
        raise ValueError("error operator does not match the code")
    rows = commutation_rows(code)
    return tuple(int(x) for x in (rows @ np.asarray(error.alpha, dtype=np.int64)) % code.modulus)


def is_logical(code: PfCode, op: PfOperator) -> bool:
    """True iff op centralizes the stabilizer but is not a stabilizer element."""
    _require_valid(code)
    if op.modulus != code.modulus or op.num_modes != code.num_modes:
        raise ValueError("operator does not match the code")
    if any(syndrome(code, op)):
        return False
    from .zmod import span_membership

    return not span_membership(stabilizer_matrix(code), op.alpha)


def logical_basis(code: PfCode) -> list[PfOperator]:
    """Generating logical representatives of the centralizer modulo the stabilizer.

    Each Howell-basis row of the centralizer is reduced to the
    lexicographically smallest element of its stabilizer coset; zero cosets
    drop out.  The images generate the quotient.
    """
    cent = howell_form(centralizer_basis(code))
    smat = stabilizer_matrix(code)
    seen = set()
    out = []
    for row in cent.array:
        rep = coset_minimum(smat, row)
        key = tuple(int(x) for x in rep)
        if any(rep) and key not in seen:
            seen.add(key)
            out.append(PfOperator(code.modulus, code.num_modes, 0, key))
    return out


def _colex_combinations(universe: int, size: int):
    return sorted(itertools.combinations(range(universe), size), key=lambda c: c[::-1])


def _assignment_columns(modulus: int, size: int) -> np.ndarray:
    cols = list(itertools.product(range(1, modulus), repeat=size))
    return np.array(cols, dtype=np.int64).T.reshape(size, -1)


def distance(code: PfCode, max_weight: int | None = None) -> DistanceResult:
    """Exact minimum logical weight by enumeration in increasing weight.

    Supports are scanned in colexicographic order and exponent assignments
    in lexicographic order, so the certificate is reproducible.  Codes with
    more than 20 modes require an explicit ``max_weight``; a capped search
    that finds nothing reports value None (meaning d > cap), never a guess.
    """
    _require_valid(code)
    d, m = code.modulus, code.num_modes
    if max_weight is None:
        if m > FULL_SEARCH_MODE_LIMIT:
            raise ValueError(f"codes with more than {FULL_SEARCH_MODE_LIMIT} modes need an explicit max_weight")
        max_weight = m
    smat = stabilizer_matrix(code)
    cent_order = span_order(centralizer_basis(code))
    if cent_order == span_order(smat):
        raise InvalidCodeError("code has no logical operators (k = 0)")
    rows = commutation_rows(code)
    basis = _howell_basis(smat.array, d)

    def in_stabilizer(vec: np.ndarray) -> bool:
        reduced = _reduce_against(basis, vec, d)
        return reduced is not None and not reduced.any()

    for weight in range(1, max_weight + 1):
        assignments = _assignment_columns(d, weight)
        for supp in _colex_combinations(m, weight):
            cols = list(supp)
            values = (rows[:, cols] @ assignments) % d if rows.size else np.zeros((0, assignments.shape[1]))
            hits = np.nonzero(~values.any(axis=0))[0] if values.shape[0] else np.arange(assignments.shape[1])
            for h in hits:
                vec = np.zeros(m, dtype=np.int64)
                vec[cols] = assignments[:, h]
                if not in_stabilizer(vec):
                    cert = PfOperator(d, m, 0, tuple(int(x) for x in vec))
                    return DistanceResult(weight, max_weight, cert)
    return DistanceResult(None, max_weight, None)


def support_diameter(op: PfOperator, mode_layout: dict[int, tuple[int, ...]] | None) -> int:
    """Layout diameter of the support: largest per-axis span + 1 (0 for identity)."""
    supp = op.support()
    if not supp:
        return 0
    if mode_layout is None:
        return supp[-1] - supp[0] + 1
    coords = np.array([mode_layout[m] for m in supp], dtype=np.int64)
    return int((coords.max(axis=0) - coords.min(axis=0)).max()) + 1


def _layout_coords(code: PfCode) -> np.ndarray:
    if code.mode_layout is None:
        return np.arange(1, code.num_modes + 1, dtype=np.int64)[:, None]
    return np.array([code.mode_layout[m] for m in range(1, code.num_modes + 1)], dtype=np.int64)


def l_con(code: PfCode, max_diameter: int | None = None) -> LconResult:
    """Minimum layout diameter of a parity-preserving logical operator.

    Scans axis-aligned windows of growing side length; within each window
    the parity-zero centralizer elements supported there form a kernel over
    Z_D, and the window admits a logical iff some kernel basis row falls
    outside the stabilizer span.
    """
    _require_valid(code)
    d, m = code.modulus, code.num_modes
    coords = _layout_coords(code)
    axes = coords.shape[1]
    anchors = [np.unique(coords[:, a]) for a in range(axes)]
    diameter_bound = int((coords.max(axis=0) - coords.min(axis=0)).max()) + 1
    if max_diameter is not None:
        diameter_bound = min(diameter_bound, max_diameter)
    rows = commutation_rows(code)
    smat = stabilizer_matrix(code)
    basis = _howell_basis(smat.array, d)

    for side in range(1, diameter_bound + 1):
        seen_windows: set[frozenset] = set()
        for corner in itertools.product(*anchors):
            inside = np.ones(m, dtype=bool)
            for a in range(axes):
                inside &= (coords[:, a] >= corner[a]) & (coords[:, a] <= corner[a] + side - 1)
            modes = np.nonzero(inside)[0]
            if modes.size == 0:
                continue
            key = frozenset(int(x) for x in modes)
            if key in seen_windows:
                continue
            seen_windows.add(key)
            constraint = np.vstack([rows[:, modes], np.ones((1, modes.size), dtype=np.int64)])
            kern = kernel_basis(ZModMatrix(d, constraint.T % d))
            for row in kern.array:
                vec = np.zeros(m, dtype=np.int64)
                vec[modes] = row
                reduced = _reduce_against(basis, vec, d)
                if reduced is None or reduced.any():
                    op = PfOperator(d, m, 0, tuple(int(x) for x in vec))
                    return LconResult(support_diameter(op, code.mode_layout), op)
    return LconResult(None, None)


def _order_phase(op: PfOperator) -> int:
    """Phase exponent of (phase-stripped op)^D."""
    bare = PfOperator(op.modulus, op.num_modes, 0, op.alpha)
    return bare.power(op.modulus).mu


def canonical_phases(code: PfCode) -> PfCode:
    """Repair the generator phases so the code passes the phase check.

    Solving happens over Z_{2D}: the D-th power of each generator and every
    lifted kernel relation must come out phase-free.  Among all solutions
    the lexicographically smallest phase vector is returned; infeasibility
    raises :class:`PhaseAssignmentError`.
    """
    d = code.modulus
    two_d = 2 * d
    gens = code.generators
    for g in gens:
        if not any(g.alpha) and g.mu:
            raise PhaseAssignmentError("a generator is a nontrivial phase times the identity")
    if not gens:
        return code
    bare = code.with_generators(PfOperator(d, code.num_modes, 0, g.alpha) for g in gens)
    constraints = []
    rhs = []
    for i, g in enumerate(gens):
        row = np.zeros(len(gens), dtype=np.int64)
        row[i] = d
        constraints.append(row)
        rhs.append(-_order_phase(g) % two_d)
    for kern_row in kernel_basis(stabilizer_matrix(code)).array:
        constraints.append(kern_row % two_d)
        rhs.append(-_phase_free_product(bare, kern_row).mu % two_d)
    a = np.array(constraints, dtype=np.int64) % two_d
    system = ZModMatrix(two_d, a.T)
    particular = solve_left(system, np.array(rhs, dtype=np.int64) % two_d)
    if particular is None:
        raise PhaseAssignmentError("no consistent phase assignment exists")
    freedom = kernel_basis(system)
    mu = coset_minimum(freedom, particular)
    fixed = [PfOperator(d, code.num_modes, int(m), g.alpha) for m, g in zip(mu, gens)]
    return code.with_generators(fixed)


@dataclass(frozen=True)
class CodeReport:
    """Everything params-style reporting needs, JSON- and table-renderable."""

    modulus: int
    num_modes: int
    flags: ValidationFlags
    group_order: int | None = None
    codespace_dim: int | None = None
    k: int | None = None
    distance: DistanceResult | None = None
    lcon: LconResult | None = None
    logicals: tuple[PfOperator, ...] = ()

    def to_dict(self) -> dict:
        return {
            "D": self.modulus,
            "num_modes": self.num_modes,
            "flags": self.flags.to_dict(),
            "group_order": self.group_order,
            "codespace_dim": self.codespace_dim,
            "k": self.k,
            "distance": self.distance.to_dict() if self.distance else None,
            "l_con": self.lcon.to_dict() if self.lcon else None,
            "logical_basis": [
                {"operator": str(op), "alpha": list(op.alpha), "charge": op.charge()}
                for op in self.logicals
            ],
        }

    def render_table(self) -> str:
        lines = [
            f"modulus D        : {self.modulus}",
            f"modes 2n         : {self.num_modes}",
            f"abelian          : {self.flags.abelian}",
            f"parity_ok        : {self.flags.parity_ok}",
            f"phase_ok         : {self.flags.phase_ok}",
        ]
        if self.group_order is not None:
            lines.append(f"|S|              : {self.group_order}")
            lines.append(f"|C_S|            : {self.codespace_dim}")
            lines.append(f"k                : {self.k if self.k is not None else 'non-integral'}")
        if self.distance is not None:
            shown = self.distance.value if self.distance.exact else f"> {self.distance.cap}"
            lines.append(f"distance d       : {shown}")
            if self.distance.certificate:
                lines.append(f"  certificate    : {self.distance.certificate}")
        if self.lcon is not None:
            lines.append(f"l_con            : {self.lcon.value if self.lcon.value is not None else 'none'}")
            if self.lcon.certificate:
                lines.append(f"  certificate    : {self.lcon.certificate}")
        if self.logicals:
            lines.append("logical basis    :")
            for op in self.logicals:
                lines.append(f"  {op}  (charge {op.charge()})")
        return "\n".join(lines)


def _integral_log(value: int, base: int) -> int | None:
    k, acc = 0, 1
    while acc < value:
        acc *= base
        k += 1
    return k if acc == value else None


def analyze(
    code: PfCode,
    *,
    with_distance: bool = True,
    with_lcon: bool = True,
    max_weight: int | None = None,
    max_diameter: int | None = None,
) -> CodeReport:
    """Full report for a code; distance and l_con are skipped on invalid codes."""
    flags = validate(code)
    if not flags.all_ok:
        return CodeReport(code.modulus, code.num_modes, flags)
    order = group_order(code)
    dim = codespace_dim(code)
    k = _integral_log(dim, code.modulus)
    logicals = logical_basis(code)
    dist = None
    lc = None
    if logicals:
        if with_distance and (code.num_modes <= FULL_SEARCH_MODE_LIMIT or max_weight is not None):
            dist = distance(code, max_weight=max_weight)
        if with_lcon and (code.num_modes <= FULL_SEARCH_MODE_LIMIT or max_diameter is not None):
            lc = l_con(code, max_diameter=max_diameter)
    return CodeReport(code.modulus, code.num_modes, flags, order, dim, k, dist, lc, tuple(logicals))

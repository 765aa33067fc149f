"""Exhaustive and randomized search for parafermion codes with target (k, d).

The exhaustive engine enumerates generator tuples over the parity-zero
exponent vectors in lexicographic order, pruning on the first commutation
failure, on span-growth failure, and (for prime D) on non-canonical tuples:
every stabilizer span contains exactly one generating tuple picked greedily
by lexicographic minimality, so each candidate code is visited once.  A
finished enumeration that found nothing is returned as an explicit
nonexistence certificate; randomized mode never claims nonexistence.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import os
import time
from dataclasses import dataclass, field
from math import comb

import numpy as np

from .algebra import PfOperator, lambda_matrix
from .code import PfCode, canonical_phases, codespace_dim, distance, stabilizer_matrix, validate
from .zmod import howell_form

__all__ = [
    "SearchSpec",
    "SearchCertificate",
    "BudgetExceededError",
    "find_codes",
    "canonical_equivalence_key",
    "default_thread_count",
]

MAX_CANDIDATES = 400_000
DEFAULT_TUPLE_BUDGET = 200_000_000


class BudgetExceededError(RuntimeError):
    """The enumeration went past the configured tuple budget."""


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % q for q in range(2, int(p**0.5) + 1))


@dataclass(frozen=True)
class SearchSpec:
    """What to search for and how.

    ``generator_count`` defaults to n - k, the right number for prime D;
    composite moduli need an explicit choice.  ``max_hits = 0`` means
    exhaust the space and keep every hit.
    """

    modulus: int
    num_modes: int
    target_k: int
    target_d: int
    mode: str = "exhaustive"
    seed: int = 0
    samples: int = 20_000
    generator_count: int | None = None
    symmetry_reduction: bool = True
    max_hits: int = 1
    max_tuples: int = DEFAULT_TUPLE_BUDGET

    def __post_init__(self) -> None:
        if self.num_modes % 2 or self.num_modes < 2:
            raise ValueError("num_modes must be even and >= 2")
        if self.target_d < 1:
            raise ValueError("target_d must be >= 1")
        if self.mode not in ("exhaustive", "randomized"):
            raise ValueError(f"unknown search mode {self.mode!r}")
        if self.generator_count is None:
            if not _is_prime(self.modulus):
                raise ValueError("generator_count is required for composite moduli")
            object.__setattr__(self, "generator_count", self.num_modes // 2 - self.target_k)
        if self.generator_count < 1:
            raise ValueError("generator_count must be >= 1")

    def to_dict(self) -> dict:
        return {
            "D": self.modulus,
            "num_modes": self.num_modes,
            "target_k": self.target_k,
            "target_d": self.target_d,
            "mode": self.mode,
            "seed": self.seed,
            "samples": self.samples,
            "generator_count": self.generator_count,
            "symmetry_reduction": self.symmetry_reduction,
            "max_hits": self.max_hits,
            "max_tuples": self.max_tuples,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SearchSpec":
        known = {
            "modulus": data.get("D", data.get("modulus")),
            "num_modes": data["num_modes"],
            "target_k": data["target_k"],
            "target_d": data["target_d"],
        }
        for key in ("mode", "seed", "samples", "generator_count", "symmetry_reduction", "max_hits", "max_tuples"):
            if key in data:
                known[key] = data[key]
        return cls(**known)


@dataclass
class SearchCertificate:
    """Reproducible record of what a search did and saw."""

    spec: dict
    candidate_count: int
    estimated_tuples: int
    tuples_examined: int = 0
    hits: list = field(default_factory=list)
    exhausted: bool = False
    early_stopped: bool = False
    budget_exceeded: bool = False
    wall_time_s: float = 0.0
    threads: int = 1

    def to_dict(self, canonical: bool = False) -> dict:
        payload = {
            "spec": self.spec,
            "candidate_count": self.candidate_count,
            "estimated_tuples": self.estimated_tuples,
            "tuples_examined": self.tuples_examined,
            "hits": self.hits,
            "exhausted": self.exhausted,
            "early_stopped": self.early_stopped,
            "budget_exceeded": self.budget_exceeded,
            "threads": self.threads,
        }
        payload["signature"] = hashlib.sha256(
            json.dumps(payload, sort_keys=True).encode()
        ).hexdigest()
        if not canonical:
            payload["wall_time_s"] = self.wall_time_s
        return payload


def canonical_equivalence_key(code: PfCode) -> str:
    """Equal keys iff equal stabilizer spans (Howell form of the row matrix)."""
    h = howell_form(stabilizer_matrix(code))
    raw = f"{code.modulus}:{code.num_modes}:".encode() + h.array.tobytes()
    return hashlib.sha256(raw).hexdigest()


def default_thread_count() -> int:
    value = os.environ.get("PFSTAB_THREADS", "1")
    try:
        return max(1, int(value))
    except ValueError:
        return 1


def _parity_zero_candidates(modulus: int, num_modes: int) -> np.ndarray:
    """All nonzero alpha with sum(alpha) == 0 (mod D), in lexicographic order."""
    free = num_modes - 1
    count = modulus**free
    if count > MAX_CANDIDATES:
        raise BudgetExceededError(
            f"candidate space {modulus}^{free} exceeds the supported size {MAX_CANDIDATES}"
        )
    prefix = np.array(list(itertools.product(range(modulus), repeat=free)), dtype=np.int64)
    last = (-prefix.sum(axis=1)) % modulus
    cand = np.hstack([prefix, last[:, None]])
    return cand[1:]  # drop the all-zero row


def _weight_vectors(modulus: int, num_modes: int, lo: int, hi: int) -> np.ndarray:
    """All exponent vectors with weight in [lo, hi]."""
    rows = []
    for w in range(lo, hi + 1):
        for supp in itertools.combinations(range(num_modes), w):
            for assign in itertools.product(range(1, modulus), repeat=w):
                vec = np.zeros(num_modes, dtype=np.int64)
                vec[list(supp)] = assign
                rows.append(vec)
    if not rows:
        return np.zeros((0, num_modes), dtype=np.int64)
    return np.stack(rows)


class _Engine:
    """Shared state for one exhaustive enumeration over a first-generator range."""

    def __init__(self, spec: SearchSpec):
        self.spec = spec
        d, m = spec.modulus, spec.num_modes
        self.cand = _parity_zero_candidates(d, m)
        self.count = self.cand.shape[0]
        lam = lambda_matrix(d, m).array
        self.pairing = (self.cand @ lam) % d  # row i pairs as pairing[i] @ x
        low = _weight_vectors(d, m, 1, spec.target_d - 1)
        exact = _weight_vectors(d, m, spec.target_d, spec.target_d)
        self.low_w = low
        self.exact_w = exact
        self.comm_low = (low @ self.pairing.T) % d if low.size else np.zeros((0, self.count), dtype=np.int64)
        self.comm_exact = (exact @ self.pairing.T) % d
        self.low_keys = [v.tobytes() for v in low]
        self.nodes = 0
        self.hits: list[tuple[int, ...]] = []
        self.hit_keys: set[str] = set()
        self.positions: list[tuple[int, ...]] = []
        self.stopped = False

    # -- helpers -----------------------------------------------------------

    def _comm_mask(self, i: int) -> np.ndarray:
        return ((self.pairing[i] @ self.cand.T) % self.spec.modulus) == 0

    def _span_with(self, span: np.ndarray, g: np.ndarray) -> np.ndarray:
        d = self.spec.modulus
        scaled = (span[None, :, :] + (np.arange(d)[:, None, None] * g[None, None, :])) % d
        flat = scaled.reshape(-1, span.shape[1])
        return np.unique(flat, axis=0)

    def _is_canonical_prefix(self, chosen: list[int], span: np.ndarray) -> bool:
        """chosen must be the greedy lexicographically minimal generating tuple."""
        d = self.spec.modulus
        span_keys = sorted(tuple(int(x) for x in row) for row in span)
        sub: set[tuple[int, ...]] = {(0,) * span.shape[1]}
        sub_arr = np.zeros((1, span.shape[1]), dtype=np.int64)
        for idx in chosen:
            target = tuple(int(x) for x in self.cand[idx])
            smallest = next(t for t in span_keys if t not in sub)
            if smallest != target:
                return False
            sub_arr = self._span_with(sub_arr, self.cand[idx])
            sub = {tuple(int(x) for x in row) for row in sub_arr}
        return True

    def _accept(self, chosen: list[int]) -> None:
        spec = self.spec
        d, m = spec.modulus, spec.num_modes
        gens = tuple(PfOperator(d, m, 0, tuple(int(x) for x in self.cand[i])) for i in chosen)
        try:
            code = canonical_phases(PfCode(d, m, gens))
        except ValueError:
            return
        if not validate(code).all_ok:
            return
        if codespace_dim(code) != d**spec.target_k:
            return
        result = distance(code)
        if result.value != spec.target_d:
            return
        key = canonical_equivalence_key(code)
        if key in self.hit_keys:
            return
        self.hit_keys.add(key)
        self.hits.append(tuple(code.generators))
        self.positions.append(tuple(chosen))
        if spec.max_hits and len(self.hits) >= spec.max_hits:
            self.stopped = True

    # -- enumeration --------------------------------------------------------

    def run(self, first_lo: int = 0, first_hi: int | None = None) -> None:
        first_hi = self.count if first_hi is None else first_hi
        m = self.spec.num_modes
        zero_span = np.zeros((1, m), dtype=np.int64)
        for i in range(first_lo, first_hi):
            self._extend([i], self._comm_mask(i), self._span_with(zero_span, self.cand[i]))
            if self.stopped:
                return

    def _extend(self, chosen: list[int], comm_ok: np.ndarray, span: np.ndarray) -> None:
        spec = self.spec
        self.nodes += 1
        if self.nodes > spec.max_tuples:
            raise BudgetExceededError(f"tuple budget {spec.max_tuples} exceeded")
        depth = len(chosen)
        if spec.symmetry_reduction and not self._is_canonical_prefix(chosen, span):
            return
        if depth == spec.generator_count:
            if self._low_weight_clear(chosen, span) and self._has_exact_weight_logical(chosen, span):
                self._accept(chosen)
            return
        span_keys = {row.tobytes() for row in span}
        start = chosen[-1] + 1
        allowed = np.nonzero(comm_ok[start:])[0] + start
        for j in allowed:
            if self.stopped:
                return
            g = self.cand[j]
            if g.tobytes() in span_keys:
                continue  # span must strictly grow
            self._extend(chosen + [int(j)], comm_ok & self._comm_mask(int(j)), self._span_with(span, g))

    def _low_weight_clear(self, chosen: list[int], span: np.ndarray) -> bool:
        """Every weight < d vector centralizing all generators must be a stabilizer."""
        if self.low_w.size == 0:
            return True
        mask = np.ones(self.low_w.shape[0], dtype=bool)
        for i in chosen:
            mask &= self.comm_low[:, i] == 0
        if not mask.any():
            return True
        span_keys = {row.tobytes() for row in span}
        return all(self.low_keys[int(t)] in span_keys for t in np.nonzero(mask)[0])

    def _has_exact_weight_logical(self, chosen: list[int], span: np.ndarray) -> bool:
        mask = np.ones(self.exact_w.shape[0], dtype=bool)
        for i in chosen:
            mask &= self.comm_exact[:, i] == 0
        if not mask.any():
            return False
        span_keys = {row.tobytes() for row in span}
        return any(self.exact_w[int(t)].tobytes() not in span_keys for t in np.nonzero(mask)[0])


def _code_payload(generators: tuple[PfOperator, ...]) -> dict:
    return {
        "generators": [{"mu": g.mu, "alpha": list(g.alpha)} for g in generators],
    }


def _run_block(spec_dict: dict, lo: int, hi: int) -> dict:
    spec = SearchSpec.from_dict(spec_dict)
    engine = _Engine(spec)
    budget_hit = False
    try:
        engine.run(lo, hi)
    except BudgetExceededError:
        budget_hit = True
    return {
        "nodes": engine.nodes,
        "hits": [_code_payload(h) for h in engine.hits],
        "positions": engine.positions,
        "stopped": engine.stopped,
        "budget": budget_hit,
    }


def _find_exhaustive(spec: SearchSpec, threads: int) -> tuple[list[PfCode], SearchCertificate]:
    start_time = time.monotonic()
    probe = _Engine(spec)  # also validates the candidate space size
    cert = SearchCertificate(
        spec=spec.to_dict(),
        candidate_count=probe.count,
        estimated_tuples=comb(probe.count, spec.generator_count),
        threads=threads,
    )
    if threads <= 1:
        results = [_run_block(spec.to_dict(), 0, probe.count)]
    else:
        import concurrent.futures as futures

        bounds = np.linspace(0, probe.count, threads + 1).astype(int)
        with futures.ProcessPoolExecutor(max_workers=threads) as pool:
            jobs = [
                pool.submit(_run_block, spec.to_dict(), int(lo), int(hi))
                for lo, hi in zip(bounds[:-1], bounds[1:])
                if lo < hi
            ]
            results = [j.result() for j in jobs]

    ordered: list[tuple[tuple[int, ...], dict]] = []
    for res in results:
        cert.tuples_examined += res["nodes"]
        cert.budget_exceeded = cert.budget_exceeded or res["budget"]
        for pos, payload in zip(res["positions"], res["hits"]):
            ordered.append((pos, payload))
    ordered.sort(key=lambda item: item[0])
    if spec.max_hits:
        ordered = ordered[: spec.max_hits]
    codes = []
    seen = set()
    for _, payload in ordered:
        gens = tuple(
            PfOperator(spec.modulus, spec.num_modes, g["mu"], tuple(g["alpha"]))
            for g in payload["generators"]
        )
        code = PfCode(spec.modulus, spec.num_modes, gens)
        key = canonical_equivalence_key(code)
        if key not in seen:
            seen.add(key)
            codes.append(code)
            cert.hits.append({"key": key, **_code_payload(gens)})
    cert.early_stopped = bool(spec.max_hits) and len(codes) >= spec.max_hits
    cert.exhausted = not cert.budget_exceeded and not any(r["stopped"] for r in results)
    cert.wall_time_s = time.monotonic() - start_time
    return codes, cert


def _find_randomized(spec: SearchSpec) -> tuple[list[PfCode], SearchCertificate]:
    start_time = time.monotonic()
    engine = _Engine(spec)
    rng = np.random.default_rng(spec.seed)
    cert = SearchCertificate(
        spec=spec.to_dict(),
        candidate_count=engine.count,
        estimated_tuples=spec.samples,
    )
    codes: list[PfCode] = []
    for _ in range(spec.samples):
        cert.tuples_examined += 1
        idx = sorted(int(x) for x in rng.choice(engine.count, spec.generator_count, replace=False))
        ok = True
        for a, b in itertools.combinations(idx, 2):
            if (engine.pairing[a] @ engine.cand[b]) % spec.modulus:
                ok = False
                break
        if not ok:
            continue
        span = np.zeros((1, spec.num_modes), dtype=np.int64)
        independent = True
        for i in idx:
            if engine.cand[i].tobytes() in {row.tobytes() for row in span}:
                independent = False
                break
            span = engine._span_with(span, engine.cand[i])
        if not independent:
            continue
        if engine._low_weight_clear(idx, span) and engine._has_exact_weight_logical(idx, span):
            engine._accept(list(idx))
        if engine.stopped:
            break
    for gens in engine.hits:
        code = PfCode(spec.modulus, spec.num_modes, gens)
        codes.append(code)
        cert.hits.append({"key": canonical_equivalence_key(code), **_code_payload(gens)})
    cert.early_stopped = engine.stopped
    cert.exhausted = False  # sampling can never certify nonexistence
    cert.wall_time_s = time.monotonic() - start_time
    return codes, cert


def find_codes(spec: SearchSpec, threads: int | None = None) -> tuple[list[PfCode], SearchCertificate]:
    """Run the search described by ``spec``; returns (codes, certificate).

    Exhaustive mode partitions the first-generator choice across processes
    when ``threads > 1``; results and hit order are identical to a serial
    run.  Randomized mode is always serial and reproducible by seed.
    """
    if spec.symmetry_reduction and not _is_prime(spec.modulus) and spec.mode == "exhaustive":
        spec = SearchSpec.from_dict({**spec.to_dict(), "symmetry_reduction": False})
    if spec.mode == "randomized":
        return _find_randomized(spec)
    threads = default_thread_count() if threads is None else max(1, threads)
    return _find_exhaustive(spec, threads)

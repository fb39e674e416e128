"""Invariant suites behind ``schurpress verify``.

Each suite checks properties at a caller-chosen scale and tolerance.  Output depends
only on the arguments (no timings), so a fixed seed gives identical reports.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import cg, combinatorics as comb, compressor, oracle
from .wigner import InvalidCombination, wigner_coefficient

SELECTION_TOL = 1e-12


@dataclass
class PropertyResult:
    suite: str
    name: str
    passed: int = 0
    failed: int = 0
    counterexample: dict | None = None

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.suite}.{self.name}: passed={self.passed} failed={self.failed}"


@dataclass
class Report:
    results: list[PropertyResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def first_failure(self) -> PropertyResult | None:
        return next((r for r in self.results if not r.ok), None)

    def render(self) -> str:
        lines = [r.line() for r in self.results]
        bad = self.first_failure()
        if bad is None:
            lines.append(f"OK: {len(self.results)} properties")
        else:
            lines.append(f"FAILED: {sum(not r.ok for r in self.results)} of {len(self.results)} properties")
            lines.append("first counterexample: " + json.dumps(
                {"property": f"{bad.suite}.{bad.name}", **bad.counterexample}, sort_keys=True))
        return "\n".join(lines) + "\n"


class _Suite:
    def __init__(self, name: str, report: Report):
        self.name = name
        self.report = report
        self._current: dict[str, PropertyResult] = {}

    def check(self, prop: str, ok: bool, **example) -> None:
        res = self._current.get(prop)
        if res is None:
            res = self._current[prop] = PropertyResult(self.name, prop)
            self.report.results.append(res)
        if ok:
            res.passed += 1
        else:
            res.failed += 1
            if res.counterexample is None:
                res.counterexample = {k: _jsonable(v) for k, v in example.items()}


def _jsonable(v):
    if isinstance(v, np.ndarray):
        v = v.tolist()
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, complex):
        return [v.real, v.imag]
    if isinstance(v, (np.integer,)):
        return int(v)
    if isinstance(v, (np.floating,)):
        return float(v)
    return v


def _combinatorics(s: _Suite, n_max: int, d_max: int, tol: float, rng) -> None:
    for d in range(1, d_max + 1):
        for n in range(0, n_max + 1):
            s.check("dim_symmetric_matches_enumeration",
                    comb.dim_irrep(comb.Partition.symmetric(n, d)) == comb.dim_symmetric(n, d),
                    n=n, d=d)
            for r, c in enumerate(comb.enumerate_occupations(n, d)):
                ok = (comb.occupation_index(c) == r
                      and comb.occupation_of_index(r, n, d) == c
                      and comb.occupation_of_pattern(comb.pattern_of_occupation(c)) == c)
                s.check("occupation_rank_roundtrip", ok, c=c, rank=r)
    for d in range(1, min(d_max, 4) + 1):
        for w in range(0, min(n_max, 6) + 1):
            for mu in comb.partitions(w, d):
                pats = comb.enumerate_patterns(mu)
                between = all(all(p.rows[r][i] >= p.rows[r + 1][i] >= p.rows[r][i + 1]
                                  for i in range(len(p.rows[r + 1])))
                              for p in pats for r in range(d - 1))
                s.check("patterns_interlace", between, mu=mu)
                s.check("patterns_sorted_unique", pats == sorted(set(pats), reverse=True), mu=mu)
                total = sum(comb.dim_irrep(lam) for lam in comb.add_box_set(mu))
                s.check("add_box_dimension_count", total == d * len(pats), mu=mu, total=total)


def _wigner_value(top, nxt, j, jp):
    try:
        return wigner_coefficient(tuple(top), tuple(nxt), j, jp)
    except InvalidCombination:
        return None


def _wigner(s: _Suite, n_max: int, d_max: int, tol: float, rng) -> None:
    for d in range(2, min(d_max, 4) + 1):
        for w in range(0, min(n_max, 6) + 1):
            for top in comb.partitions(w, d):
                outs = [j for j in range(1, d + 1) if top.add_box(j) is not None]
                for nxt in comb.partitions_below(top):
                    ins = [jp for jp in range(0, d) if jp == 0 or nxt.add_box(jp) is not None]
                    for jp in ins:
                        vals = [_wigner_value(top, nxt, j, jp) for j in outs]
                        norm = math.fsum(v * v for v in vals)
                        s.check("column_norm_over_j", abs(norm - 1) <= tol,
                                top=top, next=nxt, j_prime=jp, norm=norm)
                        s.check("magnitude_at_most_one", all(abs(v) <= 1 + tol for v in vals),
                                top=top, next=nxt, j_prime=jp, values=vals)
                # fixed output rows (top + e_j, nu): sum over the inputs that reach them
                for nu in (nu for x in range(w + 2) for nu in comb.partitions(x, d - 1)):
                    for j in outs:
                        lam = top.add_box(j)
                        if not comb.interlaces(nu, lam):
                            continue
                        vals = []
                        for jp in range(0, d):
                            nxt = nu if jp == 0 else nu.remove_box(jp)
                            if nxt is None or not comb.interlaces(nxt, top):
                                continue
                            vals.append(_wigner_value(top, nxt, j, jp))
                        if not vals:
                            continue
                        norm = math.fsum(v * v for v in vals)
                        s.check("row_norm_over_j_prime", abs(norm - 1) <= tol,
                                top=top, new_next=nu, j=j, norm=norm)
    for k in range(0, n_max):
        for m in range(0, k + 1):
            v = wigner_coefficient((k, 0), (m,), 1, 1)
            s.check("spin_half_closed_form",
                    abs(abs(v) - oracle.spin_cg_closed_form(k, m, 1)) <= tol, k=k, m=m, value=v)


def _cg(s: _Suite, n_max: int, d_max: int, tol: float, rng) -> None:
    for d in range(1, d_max + 1):
        for k in range(0, n_max):
            w = cg.build_cg_symmetric(d, k)
            m = w.matrix
            err = float(np.abs(m @ m.conj().T - np.eye(m.shape[0])).max())
            s.check("isometry_rows_orthonormal", err <= tol, d=d, k=k, error=err)
            expected = np.zeros(m.shape)
            for r, c_out in enumerate(w.row_index):
                for i in range(d):
                    if c_out[i] > 0:
                        c_in = c_out.copy()
                        c_in[i] -= 1
                        col = comb.occupation_index(c_in) * d + i
                        expected[r, col] = math.sqrt(c_out[i] / (k + 1))
            support = expected > 0
            s.check("selection_rule", bool(np.all(np.abs(m[~support]) < SELECTION_TOL)), d=d, k=k)
            s.check("entries_real_positive",
                    bool(np.all(m[support].real > 0) and np.all(m[support].imag == 0)), d=d, k=k)
            mag = float(np.abs(np.abs(m) - expected).max())
            s.check("magnitude_law", mag <= tol, d=d, k=k, error=mag)
    for d in range(1, min(d_max, 3) + 1):
        for k in range(0, min(n_max - 1, 5) + 1):
            w = cg.build_cg_symmetric(d, k)
            u = cg.complete_to_unitary(w)
            err = float(np.abs(u.matrix.conj().T @ u.matrix - np.eye(len(u.matrix))).max())
            s.check("completion_unitary", err <= tol, d=d, k=k, error=err)
            s.check("completion_keeps_block",
                    bool(np.array_equal(u.block(comb.Partition.symmetric(k + 1, d)), w.matrix)),
                    d=d, k=k)
        for wt in range(0, min(n_max - 1, cg.FULL_CG_MAX_WEIGHT) + 1):
            for mu in comb.partitions(wt, d):
                u = cg.build_cg_full(d, mu).matrix
                err = float(np.abs(u @ u.conj().T - np.eye(len(u))).max())
                s.check("full_cg_unitary", err <= tol, d=d, mu=mu, error=err)


def _compressor(s: _Suite, n_max: int, d_max: int, tol: float, rng) -> None:
    for d in range(2, d_max + 1):
        for n in range(2, n_max + 1):
            for _ in range(3):
                phi = oracle.random_qudit(d, rng)
                psi = oracle.random_qudit(d, rng)
                a = compressor.compress(phi, n)
                b = compressor.compress(psi, n)
                err = float(np.abs(a.amplitudes - oracle.expected_compressed(phi, n).amplitudes).max())
                s.check("oracle_equivalence", err <= tol, d=d, n=n, phi=phi.amplitudes, error=err)
                lhs = np.vdot(a.amplitudes, b.amplitudes)
                rhs = np.vdot(phi.amplitudes, psi.amplitudes) ** n
                s.check("inner_product_law", abs(lhs - rhs) <= tol, d=d, n=n, error=abs(lhs - rhs))
                if d <= compressor.DENSE_MAX_D and n <= compressor.DENSE_MAX_N:
                    dense, leak = compressor.compress_dense(oracle.tensor_power_state(phi, n))
                    err = float(np.abs(dense.amplitudes - a.amplitudes).max())
                    s.check("dense_path_equivalence", err <= tol and leak <= tol,
                            d=d, n=n, error=err, leakage=leak)
                    fid = abs(np.vdot(compressor.decompress(a).amplitudes,
                                      oracle.tensor_power_state(phi, n).amplitudes))
                    s.check("roundtrip_fidelity", fid >= 1 - tol, d=d, n=n, fidelity=fid)
    singlet = compressor.DenseState(2, 2, np.array([0, 1, -1, 0]) / math.sqrt(2))
    _, leak = compressor.compress_dense(singlet)
    s.check("singlet_leakage", abs(leak - 1) <= tol, leakage=leak)


SUITES: dict[str, Callable] = {
    "combinatorics": _combinatorics,
    "wigner": _wigner,
    "cg": _cg,
    "compressor": _compressor,
}


def run(suite: str = "all", n_max: int = 6, d_max: int = 3, tol: float = 1e-9,
        seed: int = 0) -> Report:
    names = list(SUITES) if suite == "all" else [suite]
    report = Report()
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}")
        rng = np.random.default_rng([seed, list(SUITES).index(name)])
        SUITES[name](_Suite(name, report), n_max, d_max, tol, rng)
    return report

"""Registry and evaluation of the verifiable identities.

Every identity is evaluated on both sides with exact integer arithmetic and
passes only on exact equality.  A failed exact division inside a side is
reported as a failing result carrying a diagnostic, never raised, so sweeps
always run to completion.
"""

from __future__ import annotations

import csv
import io
import json
import random
from dataclasses import dataclass
from datetime import datetime, timezone
from enum import Enum
from typing import Callable, Iterable, Mapping, Union

from ._version import __version__
from .algebra import UNIT_I, UNIT_J, UNIT_K, NilQuat, NonDivisible
from .quaternions import (
    ALPHA_Q,
    C_POW,
    C_TWIST,
    binet_jn_quat,
    binet_jln_quat,
    jln_quat,
    jn_quat,
    quat_sum_jn,
    un_quat,
)
from .sequences import (
    IndexOutOfRange,
    third_jacobsthal,
    third_jacobsthal_lucas,
    u3,
)

_TOOL = "niljac"

Value = Union[NilQuat, int]
#: A side that failed to evaluate is carried as a diagnostic string.
SideValue = Union[NilQuat, int, str]


class EmptySelection(ValueError):
    """A sweep was requested with no identities selected."""


class IdentityId(str, Enum):
    """Tags for every identity the engine can check.

    ``P1`` .. ``P9`` are the scalar-sequence identities; the ``T`` tags are
    the quaternion-level ones, grouped by the family they belong to.
    """

    P1 = "P1"
    P2 = "P2"
    P3 = "P3"
    P4 = "P4"
    P5 = "P5"
    P6 = "P6"
    P7 = "P7"
    P8 = "P8"
    P9 = "P9"
    T1_REC = "T1_REC"
    T1_RECON = "T1_RECON"
    T1_SQSUM = "T1_SQSUM"
    T2_SHIFT = "T2_SHIFT"
    T2_SUM3 = "T2_SUM3"
    T2_POW4 = "T2_POW4"
    T3_SUM = "T3_SUM"
    T4_COMM = "T4_COMM"
    T4_CONJPROD = "T4_CONJPROD"
    T5_BINET_J = "T5_BINET_J"
    T5_BINET_JL = "T5_BINET_JL"
    T6_DOCAGNE = "T6_DOCAGNE"
    T6_CASSINI = "T6_CASSINI"


_ORDER = {ident: pos for pos, ident in enumerate(IdentityId)}

#: Short names accepted on top of the tags themselves (tags already match
#: case-insensitively, which covers p1 .. p9).
_ALIASES = {
    "t1": IdentityId.T1_REC,
    "t2": IdentityId.T1_RECON,
    "t3": IdentityId.T1_SQSUM,
    "t4": IdentityId.T2_SHIFT,
    "t5": IdentityId.T2_SUM3,
    "t6": IdentityId.T2_POW4,
    "t7": IdentityId.T3_SUM,
    "t8": IdentityId.T4_COMM,
    "t9": IdentityId.T4_CONJPROD,
    "t10": IdentityId.T5_BINET_J,
    "t11": IdentityId.T5_BINET_JL,
    "t12": IdentityId.T6_DOCAGNE,
    "t13": IdentityId.T6_CASSINI,
}


def identity_from_name(name: str) -> IdentityId:
    """Resolve a tag (case-insensitive) or a short alias like ``t13``."""
    token = name.strip()
    upper = token.upper()
    if upper in IdentityId.__members__:
        return IdentityId[upper]
    alias = _ALIASES.get(token.lower())
    if alias is None:
        raise KeyError(f"unknown identity {name!r}")
    return alias


# --- side evaluators -------------------------------------------------------

_J = third_jacobsthal
_jl = third_jacobsthal_lucas


def _j3_sum_naive(n: int) -> int:
    return sum(_J(k) for k in range(n + 1))


def _j3_sum_piecewise(n: int) -> int:
    tail = _J(n + 1)
    return tail - 1 if n % 3 == 0 else tail


def _jn_sum_naive(m: int) -> NilQuat:
    total = NilQuat()
    for s in range(m + 1):
        total = total + jn_quat(s)
    return total


def _reconstruct_scalar(m: int) -> NilQuat:
    return (
        jn_quat(m)
        - jn_quat(m + 1) * UNIT_I
        - jn_quat(m + 2) * UNIT_J
        - jn_quat(m + 3) * UNIT_K
    )


def _square_sum_lhs(m: int) -> NilQuat:
    return jn_quat(m) ** 2 + jn_quat(m + 1) ** 2 + jn_quat(m + 2) ** 2


def _square_sum_rhs(m: int) -> NilQuat:
    numerator = (
        C_POW * (3 * 4 ** (m + 1))
        - un_quat(m) * 2 ** (m + 2)
        - NilQuat(0, 1, 2, 4) * (u3(m) * 2 ** (m + 3))
        + C_TWIST * 2
    )
    return numerator.exact_div(7)


def _conj_comm_lhs(m: int) -> NilQuat:
    return jln_quat(m) * jn_quat(m).conjugate() - jln_quat(m).conjugate() * jn_quat(m)


def _conj_comm_rhs(m: int) -> NilQuat:
    return (jln_quat(m) * _J(m) - jn_quat(m) * _jl(m)) * 2


def _conj_product_lhs(m: int) -> NilQuat:
    return jln_quat(m) * jn_quat(m) + jln_quat(m).conjugate() * jn_quat(m).conjugate()


def _conj_product_rhs(m: int) -> NilQuat:
    # the cancellation of the conjugate pair leaves a pure scalar
    return NilQuat(2 * _jl(m) * _J(m))


def _conj_product_stated_rhs(m: int) -> NilQuat:
    """Quaternion-valued variant right side ``2*j(m)*JN(m)``; false in general."""
    return jn_quat(m) * (2 * _jl(m))


def _docagne_lhs(m: int, n: int) -> NilQuat:
    return jn_quat(n) * jn_quat(m + 1) - jn_quat(n + 1) * jn_quat(m)


def _docagne_rhs(m: int, n: int) -> NilQuat:
    shifted = un_quat(m + 1) * 2 ** (n + 1) - un_quat(n + 1) * 2 ** (m + 1)
    return (ALPHA_Q * shifted + C_TWIST * u3(n - m)).exact_div(7)


def _cassini_lhs(m: int) -> NilQuat:
    return jn_quat(m + 1) ** 2 - jn_quat(m + 2) * jn_quat(m)


def _cassini_rhs(m: int) -> NilQuat:
    doubled = un_quat(m + 1) * 2 - un_quat(m + 2)
    return (ALPHA_Q * doubled * 2 ** (m + 1) + C_TWIST).exact_div(7)


_SQSUM_NOTE = (
    "checked as a sum of quaternion squares; the scalar norm-squared reading "
    "of the left side cannot equal the quaternion-valued right side"
)
_CONJPROD_NOTE = (
    "checked against the scalar right side 2*j(m)*J(m), which the conjugate "
    "cancellation yields; the quaternion-valued variant right side "
    "2*j(m)*JN(m) is false (see counterexample)"
)


@dataclass(frozen=True)
class _Entry:
    min_m: int
    lhs: Callable[..., Value]
    rhs: Callable[..., Value]
    pair: bool = False
    note: str | None = None


_REGISTRY: dict[IdentityId, _Entry] = {
    IdentityId.P1: _Entry(0, lambda n: 3 * _J(n) + _jl(n), lambda n: 2 ** (n + 1)),
    IdentityId.P2: _Entry(3, lambda n: _jl(n) - 3 * _J(n), lambda n: 2 * _jl(n - 3)),
    IdentityId.P3: _Entry(
        0, lambda n: _J(n + 2) - 4 * _J(n), lambda n: -2 if n % 3 == 1 else 1
    ),
    IdentityId.P4: _Entry(
        0, lambda n: _jl(n) - 4 * _J(n), lambda n: (2, -3, 1)[n % 3]
    ),
    IdentityId.P5: _Entry(0, lambda n: _jl(n + 1) + _jl(n), lambda n: 3 * _J(n + 2)),
    IdentityId.P6: _Entry(
        0, lambda n: _jl(n) - _J(n + 2), lambda n: (1, -1, 0)[n % 3]
    ),
    IdentityId.P7: _Entry(
        3, lambda n: _jl(n - 3) ** 2 + 3 * _J(n) * _jl(n), lambda n: 4 ** n
    ),
    IdentityId.P8: _Entry(0, _j3_sum_naive, _j3_sum_piecewise),
    IdentityId.P9: _Entry(
        3, lambda n: _jl(n) ** 2 - 9 * _J(n) ** 2, lambda n: 2 ** (n + 2) * _jl(n - 3)
    ),
    IdentityId.T1_REC: _Entry(
        0,
        lambda m: jn_quat(m) * 2 + jn_quat(m + 1) + jn_quat(m + 2),
        lambda m: jn_quat(m + 3),
    ),
    IdentityId.T1_RECON: _Entry(0, _reconstruct_scalar, lambda m: _J(m)),
    IdentityId.T1_SQSUM: _Entry(0, _square_sum_lhs, _square_sum_rhs, note=_SQSUM_NOTE),
    IdentityId.T2_SHIFT: _Entry(
        0,
        lambda m: jln_quat(m + 3) - jn_quat(m + 3) * 3,
        lambda m: jln_quat(m) * 2,
    ),
    IdentityId.T2_SUM3: _Entry(
        0,
        lambda m: jln_quat(m + 1) + jln_quat(m),
        lambda m: jn_quat(m + 2) * 3,
    ),
    IdentityId.T2_POW4: _Entry(
        0,
        lambda m: jln_quat(m) ** 2 + jn_quat(m + 3) * jln_quat(m + 3) * 3,
        lambda m: C_POW * 4 ** (m + 3),
    ),
    IdentityId.T3_SUM: _Entry(0, _jn_sum_naive, quat_sum_jn),
    IdentityId.T4_COMM: _Entry(0, _conj_comm_lhs, _conj_comm_rhs),
    IdentityId.T4_CONJPROD: _Entry(
        0, _conj_product_lhs, _conj_product_rhs, note=_CONJPROD_NOTE
    ),
    IdentityId.T5_BINET_J: _Entry(0, jn_quat, binet_jn_quat),
    IdentityId.T5_BINET_JL: _Entry(0, jln_quat, binet_jln_quat),
    IdentityId.T6_DOCAGNE: _Entry(0, _docagne_lhs, _docagne_rhs, pair=True),
    IdentityId.T6_CASSINI: _Entry(0, _cassini_lhs, _cassini_rhs),
}

_SCALAR_PROPERTIES = frozenset(
    (
        IdentityId.P1,
        IdentityId.P2,
        IdentityId.P3,
        IdentityId.P4,
        IdentityId.P5,
        IdentityId.P6,
        IdentityId.P7,
        IdentityId.P8,
        IdentityId.P9,
    )
)


# --- results and reports ---------------------------------------------------


def _json_value(value: SideValue):
    if isinstance(value, NilQuat):
        return value.to_json()
    return str(value)


@dataclass(frozen=True)
class CheckResult:
    """One identity evaluated at specific indices.

    ``passed`` is true exactly when both sides evaluated and agree; a side
    that could not be evaluated is carried as a diagnostic string.
    """

    identity: IdentityId
    indices: Mapping[str, int]
    passed: bool
    lhs: SideValue
    rhs: SideValue

    def to_json_obj(self) -> dict:
        return {
            "identity": self.identity.value,
            "indices": dict(self.indices),
            "pass": self.passed,
            "lhs": _json_value(self.lhs),
            "rhs": _json_value(self.rhs),
        }


def _result_key(result: CheckResult):
    indices = result.indices
    return (
        _ORDER[result.identity],
        indices.get("m", -1),
        indices.get("n", -1),
        indices.get("step", -1),
    )


@dataclass
class Report:
    """Ordered collection of check results with per-identity counts.

    ``results`` and ``summary`` are deterministic functions of the request;
    only ``meta`` carries run-specific data such as the timestamp.
    """

    results: list[CheckResult]
    summary: dict[str, dict[str, int]]
    meta: dict

    @property
    def total(self) -> int:
        return len(self.results)

    @property
    def failures(self) -> int:
        return sum(1 for result in self.results if not result.passed)

    def all_passed(self) -> bool:
        return self.failures == 0

    def to_json(self, indent: int | None = 2) -> str:
        document = {
            "meta": self.meta,
            "summary": self.summary,
            "results": [result.to_json_obj() for result in self.results],
        }
        return json.dumps(document, indent=indent)

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["identity", "m", "n", "pass", "lhs", "rhs"])
        for result in self.results:
            writer.writerow(
                [
                    result.identity.value,
                    result.indices.get("m", ""),
                    result.indices.get("n", ""),
                    "true" if result.passed else "false",
                    str(result.lhs),
                    str(result.rhs),
                ]
            )
        return buffer.getvalue()

    def render_text(self, show_all: bool = False) -> str:
        lines = [f"{'identity':<14} {'pass':>8} {'fail':>8} {'total':>8}"]
        for tag, row in self.summary.items():
            lines.append(
                f"{tag:<14} {row['pass']:>8} {row['fail']:>8} {row['total']:>8}"
            )
        for note in self.meta.get("deviations", ()):
            lines.append(f"note [{note['identity']}]: {note['note']}")
        for result in self.results:
            if result.passed and not show_all:
                continue
            where = " ".join(f"{k}={v}" for k, v in result.indices.items())
            verdict = "ok  " if result.passed else "FAIL"
            lines.append(
                f"{verdict} {result.identity.value} {where}: "
                f"lhs = {result.lhs}  rhs = {result.rhs}"
            )
        if self.all_passed():
            lines.append(f"all {self.total} checks passed")
        else:
            lines.append(f"{self.failures} of {self.total} checks FAILED")
        return "\n".join(lines)


# --- evaluation ------------------------------------------------------------


def _evaluate_side(fn: Callable[..., Value], args: tuple) -> SideValue:
    try:
        return fn(*args)
    except NonDivisible as exc:
        return f"NonDivisible: {exc}"


def check(identity: IdentityId, m: int, n: int | None = None) -> CheckResult:
    """Evaluate both sides of ``identity`` at the given indices.

    ``n`` is accepted (and required) only for the two-index d'Ocagne-like
    identity, where 0 <= m <= n must hold.  Raises :class:`IndexOutOfRange`
    when an index precondition is violated.
    """
    identity = IdentityId(identity)
    entry = _REGISTRY[identity]
    if entry.pair:
        if n is None:
            raise TypeError(f"{identity.value} needs both indices m and n")
        if m < 0 or n < m:
            raise IndexOutOfRange(
                f"{identity.value} needs 0 <= m <= n, got m={m}, n={n}"
            )
        indices = {"m": m, "n": n}
        args: tuple = (m, n)
    else:
        if n is not None:
            raise TypeError(f"{identity.value} takes a single index m")
        if m < entry.min_m:
            raise IndexOutOfRange(
                f"{identity.value} needs m >= {entry.min_m}, got {m}"
            )
        indices = {"m": m}
        args = (m,)
    lhs = _evaluate_side(entry.lhs, args)
    rhs = _evaluate_side(entry.rhs, args)
    passed = not isinstance(lhs, str) and not isinstance(rhs, str) and lhs == rhs
    return CheckResult(identity, indices, passed, lhs, rhs)


def check_scalar_property(identity: IdentityId, n: int) -> CheckResult:
    """Evaluate one of the scalar identities P1 .. P9 at index ``n``."""
    if identity not in _SCALAR_PROPERTIES:
        raise ValueError(f"{identity.value} is not a scalar property")
    return check(identity, n)


# fixed seed so subsampled pair sweeps reproduce bit-identically
_PAIR_SEED = 0x4E51

_STEP_LABELS = {
    "0": "input term equals the expected constant",
    "1": "square of the middle term",
    "2": "product of the outer terms",
    "3": "difference equals the expected value",
    "4": "closed-form right side equals the expected value",
}


def _timestamp() -> str:
    return datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def _normalize_selection(identities) -> list[IdentityId]:
    if isinstance(identities, (IdentityId, str)):
        identities = [identities]
    unique = {IdentityId(ident) for ident in identities}
    return sorted(unique, key=_ORDER.__getitem__)


def _deviation_notes(selected: Iterable[IdentityId]) -> list[dict]:
    notes = []
    for ident in selected:
        entry = _REGISTRY[ident]
        if entry.note is None:
            continue
        record = {"identity": ident.value, "note": entry.note}
        if ident is IdentityId.T4_CONJPROD:
            record["counterexample"] = {
                "m": 0,
                "lhs": _json_value(_conj_product_lhs(0)),
                "variant_rhs": _json_value(_conj_product_stated_rhs(0)),
            }
        notes.append(record)
    return notes


def _summarize(
    selected: Iterable[IdentityId], results: list[CheckResult]
) -> dict[str, dict[str, int]]:
    summary = {ident.value: {"pass": 0, "fail": 0, "total": 0} for ident in selected}
    for result in results:
        row = summary[result.identity.value]
        row["total"] += 1
        row["pass" if result.passed else "fail"] += 1
    return summary


def _run_tasks(tasks: list[tuple], workers: int | None) -> list[CheckResult]:
    if workers is None or workers <= 1 or len(tasks) < 2:
        return [check(ident, m, n) for ident, m, n in tasks]
    from concurrent.futures import ThreadPoolExecutor

    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda task: check(*task), tasks))


def sweep(
    identities: Iterable[IdentityId],
    max_m: int,
    pair_budget: int | None = None,
    workers: int | None = None,
) -> Report:
    """Check every selected identity at every valid index up to ``max_m``.

    The two-index identity runs over all pairs 0 <= m <= n <= max_m; when
    ``pair_budget`` is given and smaller than the pair count, a fixed-seed
    subsample of that size is used instead.  Identities whose smallest valid
    index exceeds ``max_m`` contribute zero results.  ``workers`` only
    parallelizes evaluation; results are always assembled in canonical order.
    """
    selected = _normalize_selection(identities)
    if not selected:
        raise EmptySelection("no identities selected for sweep")
    if max_m < 0:
        raise IndexOutOfRange(f"max_m must be >= 0, got {max_m}")
    if pair_budget is not None and pair_budget < 1:
        raise ValueError(f"pair_budget must be >= 1, got {pair_budget}")

    tasks: list[tuple] = []
    for ident in selected:
        entry = _REGISTRY[ident]
        if entry.pair:
            pairs = [
                (m, n)
                for m in range(max_m + 1)
                for n in range(m, max_m + 1)
            ]
            if pair_budget is not None and len(pairs) > pair_budget:
                pairs = sorted(random.Random(_PAIR_SEED).sample(pairs, pair_budget))
            tasks.extend((ident, m, n) for m, n in pairs)
        else:
            tasks.extend((ident, m, None) for m in range(entry.min_m, max_m + 1))

    results = _run_tasks(tasks, workers)
    results.sort(key=_result_key)

    meta = {
        "tool": _TOOL,
        "version": __version__,
        "kind": "sweep",
        "max_m": max_m,
        "pair_budget": pair_budget,
        "identities": [ident.value for ident in selected],
        "generated_at": _timestamp(),
    }
    deviations = _deviation_notes(selected)
    if deviations:
        meta["deviations"] = deviations
    return Report(results, _summarize(selected, results), meta)


def _example_step(m: int, step: int, computed: NilQuat, expected: NilQuat) -> CheckResult:
    return CheckResult(
        IdentityId.T6_CASSINI,
        {"m": m, "step": step},
        computed == expected,
        computed,
        expected,
    )


def worked_example() -> Report:
    """Reproduce the two worked Cassini-like computations term by term.

    Every constant along the way is asserted bit-exactly: the four input
    quaternions, both intermediate squares and products, both final values,
    and the closed-form right sides.
    """
    expected_terms = (
        NilQuat(0, 1, 1, 2),
        NilQuat(1, 1, 2, 5),
        NilQuat(1, 2, 5, 9),
        NilQuat(2, 5, 9, 18),
    )
    results = [
        _example_step(m, 0, jn_quat(m), expected)
        for m, expected in enumerate(expected_terms)
    ]
    walkthrough = (
        (0, NilQuat(1, 2, 4, 10), NilQuat(0, 1, 1, 2), NilQuat(1, 1, 3, 8)),
        (1, NilQuat(1, 4, 10, 18), NilQuat(2, 7, 13, 28), NilQuat(-1, -3, -3, -10)),
    )
    for m, square, product, final in walkthrough:
        results.append(_example_step(m, 1, jn_quat(m + 1) ** 2, square))
        results.append(_example_step(m, 2, jn_quat(m + 2) * jn_quat(m), product))
        results.append(_example_step(m, 3, _cassini_lhs(m), final))
        results.append(_example_step(m, 4, _cassini_rhs(m), final))
    results.sort(key=_result_key)
    meta = {
        "tool": _TOOL,
        "version": __version__,
        "kind": "worked-example",
        "step_labels": dict(_STEP_LABELS),
        "generated_at": _timestamp(),
    }
    return Report(results, _summarize([IdentityId.T6_CASSINI], results), meta)

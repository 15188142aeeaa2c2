"""Sweep engine for the four conjectures.

Each check enumerates a configured range, tests every instance, and
returns a SweepReport.  Reports serialize to a canonical JSON form that
is byte-stable across reruns and shard counts; wall-clock time is kept
on the report object and pinned to 0 in the JSON.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable, Iterator

from .centralizer import default_budget, in_centralizer
from .enumeration import expand_binomial
from .errors import BudgetExceededError
from .involutions import rc_m, tau_m
from .rsk import p_tableau
from .tableau import Word, format_word, word

VERDICT_HOLDS = "holds"
VERDICT_COUNTEREXAMPLE = "counterexample"
VERDICT_INCOMPLETE = "incomplete"


@dataclass(frozen=True)
class SweepConfig:
    """Ranges for a conjecture sweep.

    u ranges over words with letters in [u_alphabet], 1 <= |u| <= u_length
    and, when u_sum_bound is set, max(u) + |u| <= u_sum_bound; w ranges
    over all words with letters in [w_alphabet] and |w| <= w_length.
    """

    conjecture: str
    u_alphabet: int = 4
    u_length: int = 4
    u_sum_bound: int | None = None
    w_alphabet: int = 4
    w_length: int = 4
    k_bound: int = 4
    shards: int = 1
    budget: int | None = None

    def __post_init__(self):
        for name in ("u_alphabet", "u_length", "w_alphabet", "w_length", "k_bound", "shards"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1, got {getattr(self, name)}")
        if self.u_sum_bound is not None and self.u_sum_bound < 1:
            raise ValueError(f"u_sum_bound must be >= 1, got {self.u_sum_bound}")
        if self.budget is not None and self.budget <= 0:
            raise ValueError(f"budget must be positive, got {self.budget}")

    def resolved_budget(self) -> int:
        return self.budget if self.budget is not None else default_budget()

    def echo(self, **extra) -> dict:
        # shards are an execution detail: reports must not depend on them
        out = {
            "u_alphabet": self.u_alphabet,
            "u_length": self.u_length,
            "u_sum_bound": self.u_sum_bound,
            "w_alphabet": self.w_alphabet,
            "w_length": self.w_length,
            "k_bound": self.k_bound,
            "budget": self.resolved_budget(),
        }
        out.update(extra)
        return out


@dataclass(frozen=True)
class SweepReport:
    conjecture: str
    config: dict
    checked: int
    verdict: str
    counterexamples: tuple
    elapsed_ms: int
    observed: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        """Canonical report payload; elapsed_ms is pinned so identical
        sweeps serialize identically."""
        return {
            "conjecture": self.conjecture,
            "config": self.config,
            "checked": self.checked,
            "verdict": self.verdict,
            "counterexamples": list(self.counterexamples),
            "elapsed_ms": 0,
            "observed": self.observed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))


def words_up_to(alphabet: int, max_len: int, min_len: int = 0) -> Iterator[Word]:
    """Words over [alphabet] by length, lexicographic within a length."""
    for n in range(min_len, max_len + 1):
        for letters in product(range(1, alphabet + 1), repeat=n):
            yield letters


def count_words_up_to(alphabet: int, max_len: int, min_len: int = 0) -> int:
    return sum(alphabet**n for n in range(min_len, max_len + 1))


def _u_range(cfg: SweepConfig) -> list:
    out = []
    for u in words_up_to(cfg.u_alphabet, cfg.u_length, min_len=1):
        if cfg.u_sum_bound is not None and max(u) + len(u) > cfg.u_sum_bound:
            continue
        out.append(u)
    return out


def _block_sizes(total: int, shards: int) -> list:
    base, extra = divmod(total, shards)
    return [base + (1 if i < extra else 0) for i in range(shards)]


def _run_sweep(total: int, instances: Iterator, check: Callable, shards: int):
    """Process instances block by block in a fixed order.

    ``check`` returns a counterexample payload or None.  Interruption
    ends the sweep after the current instance, leaving a partial count.
    Blocks are contiguous slices of the same stream, so the shard count
    never changes what gets checked or in which order.
    """
    checked = 0
    counterexamples = []
    complete = True
    try:
        for size in _block_sizes(total, shards):
            for _ in range(size):
                payload = check(next(instances))
                checked += 1
                if payload is not None:
                    counterexamples.append(payload)
    except KeyboardInterrupt:
        complete = False
    return checked, counterexamples, complete


def _require_budget(total: int, budget: int):
    if total > budget:
        raise BudgetExceededError(
            f"sweep needs {total} word checks, budget allows {budget}"
        )


def _verdict(counterexamples, complete: bool) -> str:
    if counterexamples:
        return VERDICT_COUNTEREXAMPLE
    return VERDICT_HOLDS if complete else VERDICT_INCOMPLETE


def check_max_ri(cfg: SweepConfig) -> SweepReport:
    """For every u in range and every w in C(u) in range, the first
    (number of rows of P(u)) rows of P(w) must have entries <= max(u)."""
    t0 = time.monotonic()
    us = _u_range(cfg)
    n_w = count_words_up_to(cfg.w_alphabet, cfg.w_length)
    total = len(us) * n_w
    _require_budget(total, cfg.resolved_budget())

    def instances():
        for u in us:
            m = max(u)
            ell = len(p_tableau(u).rows)
            for w in words_up_to(cfg.w_alphabet, cfg.w_length):
                yield u, m, ell, w

    def check(inst):
        u, m, ell, w = inst
        if not in_centralizer(u, w):
            return None
        rows = p_tableau(w).rows
        for i in range(min(ell, len(rows))):
            if rows[i][-1] > m:
                return {
                    "u": list(u),
                    "w": list(w),
                    "detail": f"row {i + 1} of the P-tableau has max "
                              f"{rows[i][-1]} > max(u) = {m}",
                }
        return None

    checked, cx, complete = _run_sweep(total, instances(), check, cfg.shards)
    elapsed = int((time.monotonic() - t0) * 1000)
    return SweepReport(
        conjecture="maxri",
        config=cfg.echo(),
        checked=checked,
        verdict=_verdict(cx, complete),
        counterexamples=tuple(cx),
        elapsed_ms=elapsed,
        observed={"u_words": len(us)},
    )


def check_stability(u: Iterable[int], cfg: SweepConfig) -> SweepReport:
    """Compute S_k = C(u^k) within the w range for k = 1..k_bound and
    report the smallest K (resp. L) from which the containments
    S_k <= S_{k+1} (resp. equalities) all hold through the range, along
    with every containment failure.  K or L is k_bound when nothing
    below it worked (vacuously: no containment left to check)."""
    t0 = time.monotonic()
    u = word(u)
    n_w = count_words_up_to(cfg.w_alphabet, cfg.w_length)
    total = cfg.k_bound * n_w
    _require_budget(total, cfg.resolved_budget())

    sets: dict = {k: set() for k in range(1, cfg.k_bound + 1)}

    def instances():
        for k in range(1, cfg.k_bound + 1):
            uk = u * k
            for w in words_up_to(cfg.w_alphabet, cfg.w_length):
                yield k, uk, w

    def check(inst):
        k, uk, w = inst
        if in_centralizer(uk, w):
            sets[k].add(w)
        return None

    checked, _, complete = _run_sweep(total, instances(), check, cfg.shards)
    observed: dict = {"set_sizes": [len(sets[k]) for k in range(1, cfg.k_bound + 1)]}
    if complete:
        non_containments = []
        bad_containment = 0
        bad_equality = 0
        for k in range(1, cfg.k_bound):
            diff = sets[k] - sets[k + 1]
            if diff:
                witness = min(diff)
                bad_containment = k
                non_containments.append({"k": k, "w": list(witness)})
            if sets[k] != sets[k + 1]:
                bad_equality = k
        observed["K"] = bad_containment + 1 if bad_containment else 1
        observed["L"] = bad_equality + 1 if bad_equality else 1
        observed["non_containments"] = non_containments
    elapsed = int((time.monotonic() - t0) * 1000)
    return SweepReport(
        conjecture="stability",
        config=cfg.echo(u=list(u)),
        checked=checked,
        verdict=VERDICT_HOLDS if complete else VERDICT_INCOMPLETE,
        counterexamples=(),
        elapsed_ms=elapsed,
        observed=observed,
    )


def _coefficient_failures(n: int, coeffs: tuple) -> list:
    """The four claims about the binomial coefficients of c_{n,m}(1)."""
    a = list(coeffs) + [0] * (n - len(coeffs))
    bad = []
    if a[0] != 0 or a[1] != 1:
        bad.append(f"(a) a_0={a[0]}, a_1={a[1]}")
    if any(a[k] < 1 for k in range(1, n)):
        bad.append("(b) " + ", ".join(f"a_{k}={a[k]}" for k in range(1, n) if a[k] < 1))
    for k in range(1, n - 1):
        if a[k] * a[k] < a[k - 1] * a[k + 1]:
            bad.append(f"(c) a_{k}^2 = {a[k] ** 2} < a_{k - 1}*a_{k + 1} = {a[k - 1] * a[k + 1]}")
    peak = -((-n) // 2)  # ceil(n/2)
    if a[peak] != max(a[1:n]):
        bad.append(f"(d) a_{peak}={a[peak]} is not the maximum {max(a[1:n])}")
    return bad


def check_coefficients(n_max: int, budget: int | None = None) -> SweepReport:
    """Expand c_{n,m}(1) for n = 2..n_max and test the coefficient claims:
    (a) a_0=0 and a_1=1, (b) positivity, (c) log-concavity, (d) the peak
    sits at ceil(n/2)."""
    t0 = time.monotonic()
    if n_max < 2:
        raise ValueError(f"n_max must be >= 2, got {n_max}")
    resolved = budget if budget is not None else default_budget()
    total = n_max - 1
    _require_budget(total, resolved)

    table: dict = {}

    def check(n):
        poly = expand_binomial((1,), n)
        table[str(n)] = list(poly.coefficients)
        bad = _coefficient_failures(n, poly.coefficients)
        if bad:
            return {
                "u": [1],
                "w": [],
                "detail": f"n={n}, coefficients {list(poly.coefficients)}: " + "; ".join(bad),
            }
        return None

    checked, cx, complete = _run_sweep(total, iter(range(2, n_max + 1)), check, 1)
    elapsed = int((time.monotonic() - t0) * 1000)
    return SweepReport(
        conjecture="coeffs",
        config={"n_max": n_max, "budget": resolved},
        checked=checked,
        verdict=_verdict(cx, complete),
        counterexamples=tuple(cx),
        elapsed_ms=elapsed,
        observed={"coefficients": table},
    )


def check_rc(u: Iterable[int], m: int, cfg: SweepConfig) -> SweepReport:
    """Both containments of the reverse-complement conjecture on the w
    range: tau_m(P-tableau) of every range word in C(u) must belong to
    the full set P(C(RC_m(u))), and symmetrically.  Membership on the
    right is decided through the row word, so the test never depends on
    whether that tableau happens to be reachable inside the w range."""
    t0 = time.monotonic()
    u = word(u)
    if u and max(u) > m:
        raise ValueError(f"need max(u) <= m, got max {max(u)} with m = {m}")
    u_rc = rc_m(u, m)
    n_w = count_words_up_to(cfg.w_alphabet, cfg.w_length)
    total = 2 * n_w
    _require_budget(total, cfg.resolved_budget())

    tableaux = {"forward": set(), "reverse": set()}

    def instances():
        for w in words_up_to(cfg.w_alphabet, cfg.w_length):
            yield "forward", u, u_rc, w
        for w in words_up_to(cfg.w_alphabet, cfg.w_length):
            yield "reverse", u_rc, u, w

    def check(inst):
        side, u_from, u_to, w = inst
        if not in_centralizer(u_from, w):
            return None
        t = p_tableau(w)
        tableaux[side].add(t)
        image = tau_m(t, m)
        if in_centralizer(u_to, image.row_word()):
            return None
        return {
            "u": list(u_from),
            "w": list(w),
            "detail": f"tau_{m} image with row word "
                      f"[{format_word(image.row_word())}] is not in "
                      f"C({format_word(u_to)})",
        }

    checked, cx, complete = _run_sweep(total, instances(), check, cfg.shards)
    elapsed = int((time.monotonic() - t0) * 1000)
    return SweepReport(
        conjecture="rc",
        config=cfg.echo(u=list(u), m=m),
        checked=checked,
        verdict=_verdict(cx, complete),
        counterexamples=tuple(cx),
        elapsed_ms=elapsed,
        observed={
            "c_u_tableaux": len(tableaux["forward"]),
            "c_rc_tableaux": len(tableaux["reverse"]),
        },
    )


def rc_pairs(cfg: SweepConfig) -> list:
    """(u, m) pairs in range: u from the u range, max(u) <= m, and
    m + |u| bounded by u_sum_bound when set (else m = max(u) only)."""
    pairs = []
    for u in _u_range(cfg):
        lo = max(u)
        hi = cfg.u_sum_bound - len(u) if cfg.u_sum_bound is not None else lo
        for m in range(lo, hi + 1):
            pairs.append((u, m))
    return pairs


def check_rc_sweep(cfg: SweepConfig) -> SweepReport:
    """check_rc over every (u, m) pair in range, merged into one report."""
    t0 = time.monotonic()
    pairs = rc_pairs(cfg)
    n_w = count_words_up_to(cfg.w_alphabet, cfg.w_length)
    _require_budget(2 * n_w * len(pairs), cfg.resolved_budget())
    checked = 0
    cx: list = []
    complete = True
    for u, m in pairs:
        report = check_rc(u, m, cfg)
        checked += report.checked
        cx.extend(report.counterexamples)
        if report.verdict == VERDICT_INCOMPLETE:
            complete = False
            break
    elapsed = int((time.monotonic() - t0) * 1000)
    return SweepReport(
        conjecture="rc",
        config=cfg.echo(),
        checked=checked,
        verdict=_verdict(cx, complete),
        counterexamples=tuple(cx),
        elapsed_ms=elapsed,
        observed={"pairs": len(pairs)},
    )

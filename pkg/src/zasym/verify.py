"""One verifier per identity, plus parameter sweeps.

Each verifier computes both sides independently and returns a
``VerificationReport``; a failing report always carries a witness that can
be re-checked with the primitive operations.  Hypotheses of the identities
are checked up front and raise ``PreconditionViolated``.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from math import prod
from typing import Callable, Iterable

from .errors import PreconditionViolated, TheoremPreconditionViolated
from .partitions import (
    FrobeniusCoords,
    Partition,
    content_sum,
    enumerate_partitions,
    enumerate_strict,
    enumerate_z_asymmetric,
    frobenius,
    from_frobenius,
    is_z_asymmetric,
    k_statistic,
)
from .polynomials import TruncatedMultiPolynomial
from .report import VerificationReport
from .schur import (
    dim_hook_content,
    principal_specialization,
    principal_specialization_ssyt,
    schur_bialternant_eval,
    schur_ssyt_eval,
    schur_truncated,
    ssyt_count,
    stepped_specialization,
)
from .tabloids import DEFAULT_CAP, content_gf, content_gf_enumerated, count_content_tabloids, verify_phi

__all__ = [
    "verify_littlewood_1",
    "verify_littlewood_2",
    "verify_thm21",
    "verify_thm22",
    "thm22_direct",
    "verify_thm22_reduction",
    "verify_thm33",
    "verify_lemma_k",
    "verify_cor_content",
    "verify_cor34",
    "verify_cor35",
    "verify_remark31",
    "verify_dim",
    "verify_bialternant",
    "verify_principal",
    "verify_phi",
    "sweep",
    "CLAIMS",
]

ORACLE_CAP = 200_000


def _report(claim, params, ok, lhs, rhs, witness, t0, detail="", domain_size=None):
    return VerificationReport(
        claim,
        params,
        "pass" if ok else "fail",
        lhs,
        rhs,
        None if ok else witness,
        detail,
        domain_size,
        time.perf_counter() - t0,
    )


def _coords(alpha, beta) -> FrobeniusCoords:
    try:
        return FrobeniusCoords(tuple(alpha), tuple(beta))
    except ValueError as exc:
        raise PreconditionViolated(str(exc)) from exc


def _require_asymmetric(lam: Partition, m: int) -> None:
    if not is_z_asymmetric(lam, m):
        raise PreconditionViolated(f"{lam} = {frobenius(lam)} is not {m}-asymmetric")


# --- Littlewood identities ---------------------------------------------------


def _littlewood_rhs(n_vars: int, D: int, max_length: int, conjugated: bool, signed: bool):
    rhs = TruncatedMultiPolynomial(n_vars, D)
    for w in range(0, D + 1, 2):
        for lam in enumerate_z_asymmetric(w, -1):
            if lam.length > max_length:
                continue
            shape = lam.conjugate if conjugated else lam
            sign = (-1) ** (w // 2) if signed else 1
            rhs = rhs + schur_truncated(shape, n_vars, D).scale(sign)
    return rhs


def _pair_product(n_vars: int, D: int, strict: bool):
    x = [TruncatedMultiPolynomial.variable(n_vars, D, i) for i in range(1, n_vars + 1)]
    one = TruncatedMultiPolynomial.one(n_vars, D)
    out = one
    for i in range(n_vars):
        for j in range(i + 1 if strict else i, n_vars):
            out = out * (one - x[i] * x[j])
    return out


def verify_littlewood_1(n: int = 3, D: int = 8, signed: bool = True) -> VerificationReport:
    """prod_{i<=j<=n} (1 - x_i x_j) against the signed sum of s_lambda over lambda = (alpha+1 | alpha)."""
    t0 = time.perf_counter()
    if n < 1 or D < 0:
        raise PreconditionViolated("need n >= 1 and D >= 0")
    lhs = _pair_product(n, D, strict=False)
    rhs = _littlewood_rhs(n, D, n, conjugated=False, signed=signed)
    diff = lhs.first_difference(rhs)
    witness = None if diff is None else {"monomial": list(diff[0]), "lhs": diff[1], "rhs": diff[2]}
    params = {"n": n, "D": D, "signed": signed}
    return _report("littlewood1", params, diff is None, lhs, rhs, witness, t0)


def verify_littlewood_2(n: int = 3, D: int = 8, signed: bool = True) -> VerificationReport:
    """prod_{i<j<=n+1} (1 - x_i x_j) against the signed sum of s_lambda' in n+1 variables."""
    t0 = time.perf_counter()
    if n < 1 or D < 0:
        raise PreconditionViolated("need n >= 1 and D >= 0")
    lhs = _pair_product(n + 1, D, strict=True)
    rhs = _littlewood_rhs(n + 1, D, n, conjugated=True, signed=signed)
    diff = lhs.first_difference(rhs)
    witness = None if diff is None else {"monomial": list(diff[0]), "lhs": diff[1], "rhs": diff[2]}
    params = {"n": n, "D": D, "signed": signed}
    return _report("littlewood2", params, diff is None, lhs, rhs, witness, t0)


# --- dimension identities -----------------------------------------------------


def verify_thm21(alpha, beta, m: int, p: int, q: int, oracle: bool = False) -> VerificationReport:
    t0 = time.perf_counter()
    base = from_frobenius(_coords(alpha, beta))
    if m < 0:
        raise TheoremPreconditionViolated("m must be nonnegative")
    if base.length > p or base.part(1) > q:
        raise TheoremPreconditionViolated(f"{base} needs length <= p={p} and first part <= q={q}")
    a, b = tuple(alpha), tuple(beta)
    shapes = [
        (from_frobenius((tuple(x + m for x in a), b)), p),
        (from_frobenius((tuple(x + m for x in b), a)), q),
        (from_frobenius((a, tuple(x + m for x in b))), p + m),
        (from_frobenius((b, tuple(x + m for x in a))), q + m),
    ]
    dims = [dim_hook_content(s, k) for s, k in shapes]
    ok = dims[0] * dims[1] == dims[2] * dims[3]
    detail = ""
    if oracle:
        counted = [ssyt_count(s, k) for s, k in shapes]
        if counted != dims:
            ok = False
        detail = f"ssyt counts {counted}"
    params = {"alpha": list(a), "beta": list(b), "m": m, "p": p, "q": q}
    witness = {"dims": dims, "shapes": [s.to_json() for s, _ in shapes]}
    return _report("thm21", params, ok, [dims[0], dims[1]], [dims[2], dims[3]], witness, t0, detail)


def _content_product(shape: Partition, n: int) -> int:
    return prod(n + c for c in shape.contents())


def _thm22_polynomial_decision(lam: Partition, m: int) -> tuple[bool, int | None]:
    """Decide prod(n + c) over lam == prod(n + m + c) over lam' for every n >= l(lam).

    Both sides are monic of degree |lam| in n, so agreement on |lam|+1
    consecutive integers forces equality everywhere.
    """
    conj = lam.conjugate
    for n in range(lam.length, lam.length + lam.weight + 1):
        if _content_product(lam, n) != _content_product(conj, n + m):
            return False, n
    return True, None


def _dim_or_zero(shape: Partition, n: int) -> int:
    return 0 if shape.length > n else dim_hook_content(shape, n)


def thm22_direct(lam: Partition, m: int, extra: int = 5) -> bool:
    """Compare dimensions directly on n in [l(lam), l(lam) + |lam| + extra]."""
    conj = lam.conjugate
    return all(
        _dim_or_zero(lam, n) == _dim_or_zero(conj, n + m)
        for n in range(lam.length, lam.length + lam.weight + extra + 1)
    )


def verify_thm22(lam: Partition, m: int) -> VerificationReport:
    t0 = time.perf_counter()
    if m < 0:
        raise PreconditionViolated("m must be nonnegative")
    lhs, first_bad = _thm22_polynomial_decision(lam, m)
    rhs = is_z_asymmetric(lam.conjugate, m)
    witness = {"partition": lam.to_json(), "m": m, "first_differing_n": first_bad}
    return _report("thm22", {"partition": lam.to_json(), "m": m}, lhs == rhs, lhs, rhs, witness, t0)


def verify_thm22_reduction(count: int = 20, seed: int = 0, max_weight: int = 10, max_m: int = 2) -> VerificationReport:
    """The finite-point decision agrees with a wider direct dimension comparison."""
    t0 = time.perf_counter()
    rng = random.Random(seed)
    pool = [lam for w in range(max_weight + 1) for lam in enumerate_partitions(w)]
    bad = None
    cases = []
    for _ in range(count):
        lam = rng.choice(pool)
        m = rng.randint(0, max_m)
        cases.append([lam.to_json(), m])
        if _thm22_polynomial_decision(lam, m)[0] != thm22_direct(lam, m):
            bad = {"partition": lam.to_json(), "m": m}
            break
    params = {"count": count, "seed": seed, "max_weight": max_weight, "max_m": max_m}
    return _report("thm22-reduction", params, bad is None, None, None, bad, t0, domain_size=len(cases))


def verify_thm33(lam: Partition, m: int, n: int) -> VerificationReport:
    t0 = time.perf_counter()
    _require_asymmetric(lam, m)
    if m < 1 or n < 0 or lam.length > m + n:
        raise PreconditionViolated(f"need m >= 1 and length of {lam} <= m + n = {m + n}")
    conj = lam.conjugate
    lhs = stepped_specialization(lam, 1 - n - m, n + m, route="ssyt")
    rhs = stepped_specialization(conj, 1 - n, n, route="ssyt")
    lhs_closed = stepped_specialization(lam, 1 - n - m, n + m, route="closed")
    rhs_closed = stepped_specialization(conj, 1 - n, n, route="closed")
    ok = lhs == rhs == lhs_closed == rhs_closed
    witness = {"partition": lam.to_json(), "m": m, "n": n, "closed_lhs": lhs_closed, "closed_rhs": rhs_closed}
    return _report("thm33", {"partition": lam.to_json(), "m": m, "n": n}, ok, lhs, rhs, witness, t0)


def verify_lemma_k(lam: Partition, m: int) -> VerificationReport:
    t0 = time.perf_counter()
    _require_asymmetric(lam, m)
    lhs = 2 * (k_statistic(lam) - k_statistic(lam.conjugate))
    rhs = m * lam.weight
    params = {"partition": lam.to_json(), "m": m}
    return _report("lemma-k", params, lhs == rhs, lhs, rhs, params, t0)


def verify_cor_content(lam: Partition, m: int) -> VerificationReport:
    t0 = time.perf_counter()
    _require_asymmetric(lam, m)
    lhs = content_sum(lam) - content_sum(lam.conjugate)
    rhs = -m * lam.weight
    params = {"partition": lam.to_json(), "m": m}
    return _report("cor-content", params, lhs == rhs, lhs, rhs, params, t0)


def verify_cor34(alpha, beta, m: int, n: int) -> VerificationReport:
    t0 = time.perf_counter()
    base = from_frobenius(_coords(alpha, beta))
    if base.length > n or m < 0:
        raise PreconditionViolated(f"{base} must have length <= n={n}, m >= 0")
    source = from_frobenius((tuple(a + m for a in alpha), tuple(beta)))
    target = from_frobenius((tuple(alpha), tuple(b + m for b in beta)))
    lhs = _content_product(source, n)
    rhs = _content_product(target, m + n)
    params = {"alpha": list(alpha), "beta": list(beta), "m": m, "n": n}
    witness = {"source": source.to_json(), "target": target.to_json(), **params}
    return _report("cor34", params, lhs == rhs, lhs, rhs, witness, t0)


def verify_cor35(lam: Partition, m: int, n: int, oracle_cap: int = ORACLE_CAP) -> VerificationReport:
    """Content-tabloid generating functions of lam (bound m+n) and lam' (bound n)."""
    t0 = time.perf_counter()
    _require_asymmetric(lam, m)
    if m < 0 or lam.length > m + n:
        raise PreconditionViolated(f"length of {lam} must be <= m + n = {m + n}")
    conj = lam.conjugate
    lhs = content_gf(lam, m + n)
    rhs = content_gf(conj, n).shift(m * lam.weight)
    ok = lhs == rhs
    detail = "closed-form"
    size = count_content_tabloids(lam, m + n)
    if ok and size <= oracle_cap:
        ok = (
            content_gf_enumerated(lam, m + n) == lhs
            and content_gf_enumerated(conj, n).shift(m * lam.weight) == rhs
        )
        detail = "closed-form+enumeration"
    params = {"partition": lam.to_json(), "m": m, "n": n}
    return _report("cor35", params, ok, lhs, rhs, params, t0, detail, size)


def verify_remark31(max_weight: int = 8, max_m: int = 3) -> VerificationReport:
    """Find (alpha|beta), m with different hook products on the two shifted shapes."""
    t0 = time.perf_counter()
    found = None
    for w in range(max_weight + 1):
        for base in enumerate_partitions(w):
            f = frobenius(base)
            for m in range(1, max_m + 1):
                s = from_frobenius((tuple(a + m for a in f.alpha), f.beta))
                t = from_frobenius((f.alpha, tuple(b + m for b in f.beta)))
                if prod(s.hooks()) != prod(t.hooks()):
                    found = {"alpha": list(f.alpha), "beta": list(f.beta), "m": m,
                             "hooks_source": prod(s.hooks()), "hooks_target": prod(t.hooks())}
                    break
            if found:
                break
        if found:
            break
    params = {"max_weight": max_weight, "max_m": max_m}
    report = _report("remark31", params, found is not None, None, None, None, t0)
    report.witness = found
    return report


# --- closed form against oracle ------------------------------------------------


def verify_dim(lam: Partition, n: int) -> VerificationReport:
    t0 = time.perf_counter()
    lhs = dim_hook_content(lam, n)
    rhs = ssyt_count(lam, n)
    params = {"partition": lam.to_json(), "n": n}
    return _report("hook-content", params, lhs == rhs, lhs, rhs, params, t0)


def verify_bialternant(lam: Partition, points) -> VerificationReport:
    t0 = time.perf_counter()
    lhs = schur_bialternant_eval(lam, points)
    rhs = schur_ssyt_eval(lam, points)
    ok = lhs.denominator == 1 and lhs == rhs
    params = {"partition": lam.to_json(), "points": list(points)}
    return _report("bialternant", params, ok, str(lhs), rhs, params, t0)


def verify_principal(lam: Partition, n: int) -> VerificationReport:
    t0 = time.perf_counter()
    lhs = principal_specialization(lam, n)
    rhs = principal_specialization_ssyt(lam, n)
    params = {"partition": lam.to_json(), "n": n}
    return _report("spe-schur", params, lhs == rhs, lhs, rhs, params, t0)


# --- sweeps -----------------------------------------------------------------------


def _all_partitions(max_weight: int) -> Iterable[Partition]:
    for w in range(max_weight + 1):
        yield from enumerate_partitions(w)


def _asymmetric(max_weight: int, m: int) -> Iterable[Partition]:
    for w in range(max_weight + 1):
        yield from enumerate_z_asymmetric(w, m)


def _strict_pairs(max_total: int):
    """Equal-length strict (alpha, beta) with |alpha| + |beta| <= max_total."""
    for r in range(0, max_total + 1):
        if r * (r - 1) > max_total:
            break
        for sa in range(max_total + 1):
            for alpha in enumerate_strict(sa, r):
                for sb in range(max_total - sa + 1):
                    for beta in enumerate_strict(sb, r):
                        yield alpha, beta


def _tasks(claim: str, max_weight: int, max_m: int, max_n: int | None, seed: int):
    if claim in ("littlewood1", "littlewood2"):
        for n in range(1, (max_n or 3) + 1):
            yield claim, {"n": n, "D": max_weight}
    elif claim == "thm21":
        for alpha, beta in _strict_pairs(max_weight):
            base = from_frobenius((alpha, beta))
            p0, q0 = base.length, base.part(1)
            for m in range(1, max_m + 1):
                for extra in (0, 2):
                    yield claim, {"alpha": alpha, "beta": beta, "m": m, "p": p0 + extra, "q": q0 + extra}
    elif claim == "thm22":
        for lam in _all_partitions(max_weight):
            for m in range(0, max_m + 1):
                yield claim, {"lam": lam, "m": m}
        yield "thm22-reduction", {"count": 20, "seed": seed, "max_weight": max_weight, "max_m": max_m}
    elif claim in ("thm33", "cor35"):
        span = 2 if claim == "thm33" else 3
        for m in range(1, max_m + 1):
            for lam in _asymmetric(max_weight, m):
                low = lam.conjugate.length
                for n in range(low, low + span + 1):
                    yield claim, {"lam": lam, "m": m, "n": n}
    elif claim in ("lemma-k", "cor-content"):
        for m in range(0, max_m + 1):
            for lam in _asymmetric(max_weight, m):
                yield claim, {"lam": lam, "m": m}
    elif claim == "cor34":
        for base in _all_partitions(max_weight):
            f = frobenius(base)
            for m in range(0, max_m + 1):
                for n in range(base.length, (max_n or 10) + 1):
                    yield claim, {"alpha": f.alpha, "beta": f.beta, "m": m, "n": n}
    elif claim == "phi":
        for m in range(1, max_m + 1):
            for source in _all_partitions(max_weight):
                f = frobenius(source)
                if f.rank and f.alpha[-1] < m:
                    continue
                coords = FrobeniusCoords(tuple(a - m for a in f.alpha), f.beta)
                for n in range(source.length, (max_n or 4) + 1):
                    yield claim, {"coords": coords, "m": m, "n": n}
    elif claim == "remark31":
        yield claim, {"max_weight": max_weight, "max_m": max(max_m, 1)}
    elif claim == "oracles":
        rng = random.Random(seed)
        for lam in _all_partitions(max_weight):
            for n in range(1, (max_n or 5) + 1):
                yield "spe-schur", {"lam": lam, "n": n}
                if lam.length <= n:
                    yield "hook-content", {"lam": lam, "n": n}
                if lam.length <= n <= 4:
                    for _ in range(5):
                        yield "bialternant", {"lam": lam, "points": tuple(rng.sample(range(-9, 10), n))}
    else:
        raise KeyError(f"unknown claim {claim!r}")


CLAIMS: dict[str, Callable[..., VerificationReport]] = {
    "littlewood1": verify_littlewood_1,
    "littlewood2": verify_littlewood_2,
    "thm21": verify_thm21,
    "thm22": verify_thm22,
    "thm22-reduction": verify_thm22_reduction,
    "thm33": verify_thm33,
    "lemma-k": verify_lemma_k,
    "cor-content": verify_cor_content,
    "cor34": verify_cor34,
    "cor35": verify_cor35,
    "phi": verify_phi,
    "remark31": verify_remark31,
    "hook-content": verify_dim,
    "bialternant": verify_bialternant,
    "spe-schur": verify_principal,
}

SWEEP_FAMILIES = (
    "littlewood1",
    "littlewood2",
    "thm21",
    "thm22",
    "thm33",
    "lemma-k",
    "cor-content",
    "cor34",
    "cor35",
    "phi",
    "remark31",
    "oracles",
)


def _run(task) -> VerificationReport:
    claim, kwargs = task
    return CLAIMS[claim](**kwargs)


def sweep(
    claim: str,
    max_weight: int = 8,
    max_m: int = 2,
    max_n: int | None = None,
    seed: int = 0,
    workers: int = 1,
) -> list[VerificationReport]:
    """Run a verifier over its full parameter range, in deterministic order."""
    if claim == "all":
        out = []
        for family in SWEEP_FAMILIES:
            out.extend(sweep(family, max_weight, max_m, max_n, seed, workers))
        return out
    tasks = list(_tasks(claim, max_weight, max_m, max_n, seed))
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_run, tasks, chunksize=max(1, len(tasks) // (8 * workers))))
    return [_run(t) for t in tasks]

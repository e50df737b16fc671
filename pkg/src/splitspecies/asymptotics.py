"""High-precision evaluation of the growth formulas and ratio inequalities.

The bicolored count grows like  c(n) * C(n, n/2) * 2^{n^2/4}  with a constant
that depends only on the parity of n:

    c(even) = sum_{k in Z} 2^{-k^2}          ~ 2.128937
    c(odd)  = sum_{k in Z} 2^{-(k+1/2)^2}    ~ 2.128931

Every pass/fail decision here is made in exact integer arithmetic on squared
forms (for example b_n/b_{n-1} >= 2^{(n+1)/2} becomes
b_n^2 >= 2^{n+1} b_{n-1}^2); arbitrary-precision floats (mpmath, default 256
bits) are used only to report the ratios themselves.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, factorial

import mpmath

from .counting import bicolored_labeled, split_labeled
from .series import derive_labeled_chain

DEFAULT_BITS = 256


def c_constant(parity: str, bits: int = DEFAULT_BITS):
    """The parity constant, summed until the tail is below 2^-bits."""
    if parity not in ("even", "odd"):
        raise ValueError("parity must be 'even' or 'odd'")
    if bits < 64:
        raise ValueError("use at least 64 bits")
    with mpmath.workprec(bits + 16):
        two = mpmath.mpf(2)
        half = mpmath.mpf(1) / 2
        total = mpmath.mpf(1) if parity == "even" else mpmath.mpf(0)
        k = 1 if parity == "even" else 0
        while True:
            expo = -(k * k) if parity == "even" else -((k + half) ** 2)
            term = 2 * two**expo  # the +k and -k (or -k-1) terms together
            total += term
            if term < two ** (-bits - 8):
                break
            k += 1
        return +total


def asymptotic_bicolored(n: int, bits: int = DEFAULT_BITS):
    """c(n) * C(n, floor(n/2)) * 2^{n^2/4}, as an arbitrary-precision float."""
    if n < 1:
        raise ValueError("n must be positive")
    with mpmath.workprec(bits + 16):
        c = c_constant("even" if n % 2 == 0 else "odd", bits)
        return +(c * comb(n, n // 2) * mpmath.mpf(2) ** (mpmath.mpf(n * n) / 4))


# ---------------------------------------------------------------------------
# Exact inequality checks
# ---------------------------------------------------------------------------

def _ratio_at_least_sqrt2_power(x_n: int, x_prev: int, n: int) -> bool:
    """x_n / x_prev >= 2^{(n+1)/2}, exactly, via squaring."""
    return x_n * x_n >= (1 << (n + 1)) * x_prev * x_prev


def check_b_ratio(n_max: int, kind: str = "bicolored") -> list[int]:
    """All n <= n_max violating x_n/x_{n-1} >= 2^{(n+1)/2} (exact check).

    ``kind`` selects the sequence: "bicolored" (b_n) or "split" (s_n).
    The violations form an initial segment; past it the inequality holds.
    """
    if n_max > 500:
        raise ValueError("ratio checks are capped at n_max <= 500")
    counter = {"bicolored": bicolored_labeled, "split": split_labeled}[kind]
    prev = counter(0)
    violations = []
    for n in range(1, n_max + 1):
        cur = counter(n)
        if not _ratio_at_least_sqrt2_power(cur, prev, n):
            violations.append(n)
        prev = cur
    return violations


def check_b_ratio_unlabeled(base: list[int]) -> list[int]:
    """Violations of b~_n/b~_{n-1} >= 2^{(n+1)/2}/n on supplied unlabeled data.

    ``base`` holds unlabeled split counts s~_0..s~_m; the bicolored values
    are their partial sums.
    """
    btilde = []
    total = 0
    for s in base:
        total += s
        btilde.append(total)
    violations = []
    for n in range(1, len(btilde)):
        if n * n * btilde[n] ** 2 < (1 << (n + 1)) * btilde[n - 1] ** 2:
            violations.append(n)
    return violations


def u_over_s_bound_violations(n_max: int) -> list[int]:
    """All n <= n_max violating u_n/s_n <= n^2 / 2^{(n+1)/2} (exact check)."""
    chain = derive_labeled_chain(max(n_max, 8))
    u = chain["U"].counts()
    s = chain["S"].counts()
    violations = []
    for n in range(1, n_max + 1):
        if (1 << (n + 1)) * u[n] ** 2 > n**4 * s[n] ** 2:
            violations.append(n)
    return violations


def u_over_s_monotone_from(n_max: int) -> int:
    """Smallest N with u_n/s_n strictly decreasing for all n >= N up to n_max.

    Comparisons are exact cross-multiplications.
    """
    chain = derive_labeled_chain(max(n_max, 8))
    u = chain["U"].counts()
    s = chain["S"].counts()
    threshold = 1
    for n in range(1, n_max):
        # decreasing step n -> n+1 means u_{n+1} s_n < u_n s_{n+1}
        if not u[n + 1] * s[n] < u[n] * s[n + 1]:
            threshold = n + 1
    return threshold


# ---------------------------------------------------------------------------
# Ratio report
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RatioRow:
    n: int
    b_ratio: object        # b_n / asymptotic(n)
    s_over_b: object
    u_over_s: object
    bound: object          # n^2 / 2^{(n+1)/2}
    bound_holds: bool      # exact comparison u_n/s_n <= bound


@dataclass(frozen=True)
class UnlabeledRatioRow:
    n: int
    s_tilde: int
    b_tilde: int
    u_tilde: int
    s_over_b: object
    u_over_s: object
    scaled_labeled: object  # b~_n * n! / b_n, observational only


@dataclass
class RatioReport:
    bits: int
    rows: list[RatioRow] = field(default_factory=list)
    unlabeled_rows: list[UnlabeledRatioRow] = field(default_factory=list)

    def to_json(self) -> dict:
        def fmt(x):
            return mpmath.nstr(x, 17)

        return {
            "bits": self.bits,
            "rows": [
                {"n": r.n, "b_ratio": fmt(r.b_ratio), "s_over_b": fmt(r.s_over_b),
                 "u_over_s": fmt(r.u_over_s), "bound": fmt(r.bound),
                 "bound_holds": r.bound_holds}
                for r in self.rows
            ],
            "unlabeled_rows": [
                {"n": r.n, "s_tilde": r.s_tilde, "b_tilde": r.b_tilde,
                 "u_tilde": r.u_tilde, "s_over_b": fmt(r.s_over_b),
                 "u_over_s": fmt(r.u_over_s), "scaled_labeled": fmt(r.scaled_labeled)}
                for r in self.unlabeled_rows
            ],
        }

    def to_csv(self) -> str:
        def fmt(x):
            return mpmath.nstr(x, 17)

        lines = ["n,b_ratio,s_over_b,u_over_s,bound,bound_holds"]
        for r in self.rows:
            lines.append(f"{r.n},{fmt(r.b_ratio)},{fmt(r.s_over_b)},{fmt(r.u_over_s)},"
                         f"{fmt(r.bound)},{str(r.bound_holds).lower()}")
        if self.unlabeled_rows:
            lines.append("n,s_tilde,b_tilde,u_tilde,s_over_b,u_over_s,scaled_labeled")
            for r in self.unlabeled_rows:
                lines.append(f"{r.n},{r.s_tilde},{r.b_tilde},{r.u_tilde},"
                             f"{fmt(r.s_over_b)},{fmt(r.u_over_s)},{fmt(r.scaled_labeled)}")
        return "\n".join(lines) + "\n"


def ratio_report(n_max: int, bits: int = DEFAULT_BITS,
                 unlabeled_base: list[int] | None = None) -> RatioReport:
    """Exact counts with their asymptotic and mutual ratios, for n = 1..n_max.

    If ``unlabeled_base`` (unlabeled split counts s~_0..s~_m) is supplied,
    unlabeled analogue rows are appended, including the observational
    b~_n * n!/b_n column.
    """
    if n_max > MAX_REPORT_N:
        raise ValueError(f"report capped at n <= {MAX_REPORT_N}")
    chain = derive_labeled_chain(max(n_max, 8))
    u = chain["U"].counts()
    s = chain["S"].counts()
    report = RatioReport(bits=bits)
    with mpmath.workprec(bits + 16):
        for n in range(1, n_max + 1):
            b_n = bicolored_labeled(n)
            asym = asymptotic_bicolored(n, bits)
            bound = mpmath.mpf(n * n) / mpmath.mpf(2) ** (mpmath.mpf(n + 1) / 2)
            holds = (1 << (n + 1)) * u[n] ** 2 <= n**4 * s[n] ** 2
            report.rows.append(RatioRow(
                n=n,
                b_ratio=+(mpmath.mpf(b_n) / asym),
                s_over_b=+(mpmath.mpf(s[n]) / mpmath.mpf(b_n)),
                u_over_s=+(mpmath.mpf(u[n]) / mpmath.mpf(s[n])),
                bound=+bound,
                bound_holds=holds,
            ))
        if unlabeled_base is not None:
            btilde = 0
            prev = []
            for n, s_t in enumerate(unlabeled_base):
                u_t = sum(prev)
                btilde += s_t
                prev.append(s_t)
                if n == 0:
                    continue
                report.unlabeled_rows.append(UnlabeledRatioRow(
                    n=n, s_tilde=s_t, b_tilde=btilde, u_tilde=u_t,
                    s_over_b=+(mpmath.mpf(s_t) / btilde),
                    u_over_s=+(mpmath.mpf(u_t) / s_t),
                    scaled_labeled=+(mpmath.mpf(btilde) * factorial(n) / bicolored_labeled(n)),
                ))
    return report


MAX_REPORT_N = 400

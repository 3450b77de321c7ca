"""Optimal stake construction with exact strong-duality certificates.

Pricing a gamble against upper probability caps is a linear program; its
dual optimum is found greedily by pushing mass onto the highest payoffs
first, capped per outcome.  Complementary slackness then pins down which
stake variables can be non-zero, leaving a small square linear system
solved exactly over rationals.  Every returned strategy carries both
sides of the duality, so optimality is checkable without trusting any
solver: a feasible distribution and a feasible stake vector with equal
objectives certify each other.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import combinations

from .choquet import UpperPMF
from .coupons import (
    DEFAULT_RULES,
    CouponRules,
    FirstFreeGamble,
    enumerate_coupons,
)
from .errors import (
    BaseOddsSureLossError,
    CertificateError,
    StakeSystemError,
    SureLossError,
)
from .model import Gamble, OddsTable, Outcome, Rational
from .sureloss import check_asl_single, upper_pmf_from_odds

ENUMERATION_LIMIT = 10  # exhaustive stake search is exponential beyond this


@dataclass(frozen=True)
class DualSolution:
    """Greedy optimal distribution for pricing a gamble under mass caps.

    ``ordering`` lists outcome indices from highest gamble payoff to
    lowest (ties by index).  ``p`` is in space order: the cap itself for
    ordered positions before ``k``, the leftover mass at position ``k``,
    zero after.  ``k_prime`` is the last ordered position still at its
    cap; stakes beyond it are forced to zero by complementary slackness.
    Both ``k`` and ``k_prime`` are 1-based positions into ``ordering``.
    """

    pmf: UpperPMF
    ordering: tuple[int, ...]
    p: tuple[Rational, ...]
    k: int
    k_prime: int

    def expectation(self, gamble: Gamble) -> Rational:
        return sum(
            (w * v for w, v in zip(self.p, gamble.payoffs)), Fraction(0)
        )


@dataclass(frozen=True)
class StrategyReport:
    """A certified betting strategy for one coupon position.

    ``stakes`` (space order) are the additional amounts to bet at the
    bookmaker's quoted odds on each outcome; ``alpha`` is the certified
    optimal value of the combined position for the bookmaker, so the
    customer's payoff is at least ``-alpha`` at every outcome and
    ``guaranteed_gain`` is positive exactly when the position is
    exploitable.
    """

    first_outcome: Outcome | None
    coupon_outcome: Outcome | None
    alpha: Rational
    stakes: tuple[Rational, ...]
    guaranteed_gain: Rational
    certificate: DualSolution


def order_outcomes(gamble: Gamble) -> tuple[int, ...]:
    """Outcome indices sorted by payoff, highest first, ties by index.

    Under this order each outcome's narrowest level set contains every
    earlier outcome's, which is what the greedy mass filling needs.
    """
    return tuple(
        sorted(range(len(gamble.space)), key=lambda i: (-gamble.payoffs[i], i))
    )


def construct_dual(pmf: UpperPMF, gamble: Gamble) -> DualSolution:
    """Fill probability mass greedily onto the highest payoffs, up to the caps.

    Walk the outcomes from highest payoff down, assigning each its full
    cap until total mass 1 is reached; the outcome that tops the budget
    up (position ``k``) gets the remainder and later outcomes get zero.
    The resulting distribution attains the upper natural extension of the
    gamble exactly.
    """
    if gamble.space != pmf.space:
        raise ValueError("gamble and pmf are over different outcome spaces")
    total = pmf.total()
    if total < 1:
        raise SureLossError(total)
    ordering = order_outcomes(gamble)
    p = [Fraction(0)] * len(pmf.space)
    filled = Fraction(0)
    k = len(ordering)
    for position, index in enumerate(ordering, start=1):
        cap = pmf.masses[index]
        if filled + cap >= 1:
            p[index] = 1 - filled
            k = position
            break
        p[index] = cap
        filled += cap
    k_index = ordering[k - 1]
    k_prime = k if p[k_index] == pmf.masses[k_index] else k - 1
    return DualSolution(pmf, ordering, tuple(p), k, k_prime)


def _solve_square_system(
    rows: list[list[Fraction]], rhs: list[Fraction]
) -> list[Fraction] | None:
    """Gaussian elimination over rationals; free variables pinned to 0.

    Returns None when the system is inconsistent.
    """
    n = len(rows)
    m = len(rows[0]) if rows else 0
    a = [list(row) + [b] for row, b in zip(rows, rhs)]
    pivot_cols: list[int] = []
    r = 0
    for c in range(m):
        pivot = next((i for i in range(r, n) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = a[r][c]
        a[r] = [v / inv for v in a[r]]
        for i in range(n):
            if i != r and a[i][c] != 0:
                factor = a[i][c]
                a[i] = [v - factor * w for v, w in zip(a[i], a[r])]
        pivot_cols.append(c)
        r += 1
        if r == n:
            break
    for i in range(r, n):
        if a[i][m] != 0:
            return None
    solution = [Fraction(0)] * m
    for row_i, c in enumerate(pivot_cols):
        solution[c] = a[row_i][m]
    return solution


def solve_stakes(
    table: OddsTable, gamble: Gamble, dual: DualSolution
) -> StrategyReport:
    """Derive the stake vector from the dual by complementary slackness.

    Stakes for ordered positions beyond ``k_prime`` are zero; the rest
    solve the square system making the bookmaker's combined payoff equal
    to the optimal value at each of the first ``k_prime`` ordered
    outcomes.  The solution is accepted only if it is non-negative and
    the combined payoff tops out at exactly the optimal value; otherwise
    :class:`~dutchbook.errors.StakeSystemError` is raised and the caller
    may fall back to exhaustive enumeration.
    """
    space = table.space
    alpha = dual.expectation(gamble)
    kp = dual.k_prime
    ordered = dual.ordering
    gambles = table.gambles()
    rows = [
        [gambles[ordered[i]].payoffs[ordered[j]] for i in range(kp)]
        for j in range(kp)
    ]
    rhs = [alpha - gamble.payoffs[ordered[j]] for j in range(kp)]
    solution = _solve_square_system(rows, rhs)
    if solution is None:
        raise StakeSystemError(
            "complementary-slackness system is inconsistent with the dual"
        )
    stakes = [Fraction(0)] * len(space)
    for i in range(kp):
        stakes[ordered[i]] = solution[i]
    for i, value in enumerate(solution):
        if value < 0:
            raise StakeSystemError(
                f"stake for ordered position {i + 1} "
                f"({space[ordered[i]].label}) is negative: {value}",
                index=i,
            )
    combined = _combined_payoffs(gamble, gambles, stakes)
    if max(combined) != alpha:
        raise StakeSystemError(
            "stake solution does not attain the optimal value at its maximum"
        )
    gain = -alpha if alpha < 0 else Fraction(0)
    return StrategyReport(None, None, alpha, tuple(stakes), gain, dual)


def _combined_payoffs(
    gamble: Gamble, gambles: tuple[Gamble, ...], stakes: list[Fraction]
) -> list[Fraction]:
    """Bookmaker payoff of gamble + sum(stake_i * odds gamble_i), per outcome."""
    n = len(gamble.payoffs)
    out = []
    for w in range(n):
        value = gamble.payoffs[w]
        for i in range(n):
            if stakes[i]:
                value += stakes[i] * gambles[i].payoffs[w]
        out.append(value)
    return out


def _stakes_by_enumeration(
    table: OddsTable, gamble: Gamble, alpha: Fraction
) -> tuple[Fraction, ...] | None:
    """Exhaustive vertex search for non-negative stakes at the pinned optimum.

    Feasible stakes satisfy, per outcome w: sum_i stake_i * g_i(w) <=
    alpha - gamble(w).  The feasible region is a pointed polyhedron, so
    if it is non-empty some vertex (n tight constraints out of the n
    payoff rows plus n sign constraints) is feasible.  Any feasible point
    is optimal because alpha is already the certified optimal value.
    """
    space = table.space
    n = len(space)
    if n > ENUMERATION_LIMIT:
        raise StakeSystemError(
            f"exhaustive stake enumeration limited to {ENUMERATION_LIMIT} outcomes"
        )
    gambles = table.gambles()
    g_rows = [[gambles[i].payoffs[w] for i in range(n)] for w in range(n)]
    c = [alpha - gamble.payoffs[w] for w in range(n)]
    # constraint t < n: payoff row t tight; t >= n: stake t-n pinned to 0
    for tight in combinations(range(2 * n), n):
        rows = []
        rhs = []
        for t in tight:
            if t < n:
                rows.append(g_rows[t])
                rhs.append(c[t])
            else:
                rows.append(
                    [Fraction(1 if i == t - n else 0) for i in range(n)]
                )
                rhs.append(Fraction(0))
        solution = _solve_square_system(rows, rhs)
        if solution is None:
            continue
        if any(v < 0 for v in solution):
            continue
        if all(
            sum((g_rows[w][i] * solution[i] for i in range(n)), Fraction(0))
            <= c[w]
            for w in range(n)
        ):
            return tuple(solution)
    return None


def certificate_failures(
    table: OddsTable, gamble: Gamble, report: StrategyReport
) -> list[str]:
    """Every way the report fails to certify optimality; empty means certified.

    Checks, all in exact arithmetic: the dual distribution is feasible
    (sums to 1, within the caps), the stake vector is feasible (non-
    negative, bookmaker payoff never exceeds alpha... i.e. alpha covers
    the combined payoff at every outcome), and both objectives equal
    alpha.  Feasible pair + equal objectives is a complete optimality
    proof by weak duality.
    """
    failures = []
    space = table.space
    pmf = upper_pmf_from_odds(table)
    p = report.certificate.p
    if len(p) != len(space):
        return [f"dual vector has {len(p)} entries for {len(space)} outcomes"]
    if len(report.stakes) != len(space):
        return [
            f"stake vector has {len(report.stakes)} entries for "
            f"{len(space)} outcomes"
        ]
    if sum(p, Fraction(0)) != 1:
        failures.append(f"dual masses sum to {sum(p, Fraction(0))}, not 1")
    for outcome in space:
        if not 0 <= p[outcome.index] <= pmf.masses[outcome.index]:
            failures.append(
                f"dual mass for {outcome.label} is {p[outcome.index]}, "
                f"outside [0, {pmf.masses[outcome.index]}]"
            )
    for outcome, stake in zip(space, report.stakes):
        if stake < 0:
            failures.append(f"stake on {outcome.label} is negative: {stake}")
    gambles = table.gambles()
    combined = _combined_payoffs(gamble, gambles, list(report.stakes))
    for outcome, value in zip(space, combined):
        if value > report.alpha:
            failures.append(
                f"combined payoff at {outcome.label} is {value} > alpha "
                f"{report.alpha}: stake vector is infeasible"
            )
    objective = sum(
        (w * v for w, v in zip(p, gamble.payoffs)), Fraction(0)
    )
    if objective != report.alpha:
        failures.append(
            f"dual objective {objective} differs from alpha {report.alpha}"
        )
    return failures


def verify_certificate(
    table: OddsTable, gamble: Gamble, report: StrategyReport
) -> bool:
    """True when the report is a complete, exact optimality certificate."""
    return not certificate_failures(table, gamble, report)


def strategy_for_coupon(
    table: OddsTable, ffg: FirstFreeGamble
) -> StrategyReport:
    """Certified optimal strategy for one specific coupon position."""
    verdict = check_asl_single(table)
    if not verdict.avoids:
        raise BaseOddsSureLossError(verdict.total)
    pmf = upper_pmf_from_odds(table)
    dual = construct_dual(pmf, ffg.gamble)
    if dual.expectation(ffg.gamble) < 0:
        # a sure gain forces bets on every outcome outside the coupon pair,
        # so at most those two can end up stakeless
        assert dual.k_prime >= len(table.space) - 2
    try:
        report = solve_stakes(table, ffg.gamble, dual)
    except StakeSystemError:
        alpha = dual.expectation(ffg.gamble)
        stakes = _stakes_by_enumeration(table, ffg.gamble, alpha)
        if stakes is None:
            raise
        gain = -alpha if alpha < 0 else Fraction(0)
        report = StrategyReport(None, None, alpha, stakes, gain, dual)
    report = replace(
        report,
        first_outcome=ffg.first_outcome,
        coupon_outcome=ffg.coupon_outcome,
    )
    failures = certificate_failures(table, ffg.gamble, report)
    if failures:
        raise CertificateError(
            "internal error, produced strategy failed verification: "
            + "; ".join(failures)
        )
    return report


def best_strategy(
    table: OddsTable, rules: CouponRules = DEFAULT_RULES
) -> StrategyReport | None:
    """Best certified coupon strategy, or None when no coupon is exploitable.

    Scans every admissible (first, coupon) pair and keeps the one with
    the most negative value; ties fall to the lexicographically first
    pair.  The base odds must avoid sure loss.
    """
    entries = enumerate_coupons(table, rules)
    if not entries:
        return None
    ffg, value = entries[0]
    if value >= 0:
        return None
    return strategy_for_coupon(table, ffg)

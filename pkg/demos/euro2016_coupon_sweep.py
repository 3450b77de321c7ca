"""
Sweeping a real tournament market for exploitable coupons
=========================================================

Real odds on the Euro 2016 winner, 24 outcomes quoted by 27 bookmakers.
The market as a whole avoids sure loss, even at the best quotes per
outcome.  But one bookmaker's first-bet coupon changes the picture:
scanning all 24 x 23 = 552 (first bet, coupon) pairs against that
bookmaker's own caps turns up four positions whose price is negative,
each convertible into a certified guaranteed gain.
"""

from dutchbook import (
    best_strategy,
    check_asl_market,
    check_asl_single,
    enumerate_coupons,
    first_free_gamble,
    format_decimal,
    format_rational,
    load_fixture_market,
    strategy_for_coupon,
)

market = load_fixture_market("euro2016.csv")
print(f"{len(market.space)} outcomes, {len(market.tables)} bookmakers")

verdict = check_asl_market(market)
print(
    f"market best-quote cap total: {format_decimal(verdict.total)} "
    f"-> avoids sure loss: {verdict.avoids}"
)

bet2 = market.table("Bet2")
own = check_asl_single(bet2)
print(
    f"Bet2 alone: cap total {format_decimal(own.total)} "
    f"-> avoids sure loss: {own.avoids}"
)

entries = enumerate_coupons(bet2)
negatives = [(f, v) for f, v in entries if v < 0]
print(f"\ncoupon pairs evaluated: {len(entries)}, exploitable: {len(negatives)}")
for ffg, value in negatives:
    print(
        f"  first {ffg.first_outcome.label:<7} coupon "
        f"{ffg.coupon_outcome.label:<7} price {format_decimal(value)}"
    )

print("\nStrategy for the (France, Spain) coupon, a 1-unit first bet:")
fs = first_free_gamble(
    bet2, bet2.space.outcome("France"), bet2.space.outcome("Spain")
)
report = strategy_for_coupon(bet2, fs)
print(f"{'outcome':<15} {'odds':>5} {'stake':>7}")
for outcome, stake in zip(bet2.space, report.stakes):
    print(
        f"{outcome.label:<15} {str(bet2.odds_for(outcome)):>5} "
        f"{format_rational(stake):>7}"
    )
print(
    f"guaranteed gain: {format_decimal(report.guaranteed_gain)} "
    f"per unit of first stake (certificate k'={report.certificate.k_prime})"
)

best = best_strategy(bet2)
print(
    f"\nbest available pair: first {best.first_outcome.label}, coupon "
    f"{best.coupon_outcome.label}, gain {format_decimal(best.guaranteed_gain)}"
)

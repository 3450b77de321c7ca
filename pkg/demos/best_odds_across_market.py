"""
Shopping for the best odds across a market
==========================================

With several bookmakers quoting the same event, a customer hunting for a
risk-free profit only ever needs the best (highest) odds on each
outcome: better odds mean smaller implied probability caps, and the
market as a whole is exploitable exactly when those smallest caps total
less than 1.  So one synthetic "best quotes" table decides the verdict
for every bookmaker at once.
"""

from dutchbook import (
    check_asl_market,
    check_asl_single,
    expectation_sign_check,
    format_decimal,
    load_fixture_market,
    max_odds,
)

market = load_fixture_market("three_bookmakers.csv")

print("Quotes per bookmaker:")
header = "outcome  " + "  ".join(f"{name:>8}" for name in market.bookmakers)
print(" " + header)
for outcome in market.space:
    row = "  ".join(
        f"{str(t.odds_for(outcome)):>8}" for t in market.tables
    )
    print(f" {outcome.label:<8} {row}")

best = max_odds(market)
print("\nBest quote per outcome:")
for outcome in market.space:
    print(f"  {outcome.label}: {best.odds_for(outcome)}")

verdict = check_asl_market(market)
print(f"\nBest-quote cap total: {format_decimal(verdict.total)}")
print(f"Market avoids sure loss: {verdict.avoids}")

print("\nEach bookmaker alone:")
for table in market.tables:
    own = check_asl_single(table)
    print(
        f"  {table.bookmaker}: total {format_decimal(own.total)}, "
        f"avoids {own.avoids}"
    )

print("\nThe market witness covers every gamble of every bookmaker:")
covered = all(
    expectation_sign_check(gamble, verdict.witness)
    for table in market.tables
    for gamble in table.gambles()
)
print(f"  all {3 * len(market.tables)} gambles non-negative in expectation: {covered}")

print("\nNote Forest's quotes are dominated everywhere, so a rational")
print("customer would never pick them... which is exactly why a bookmaker")
print("in that position hands out free coupons (see coupon_sure_gain.py).")

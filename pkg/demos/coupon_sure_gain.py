"""
Turning a free-bet coupon into a guaranteed gain
================================================

A first-bet coupon refunds the customer's first stake as a free bet on a
single different outcome with the same bookmaker.  The combined position
is one extra gamble the bookmaker implicitly accepts, and its price
against the implied probability caps decides everything: a negative
price means the bookmaker's offers plus the coupon admit a sure loss,
of exactly that size, for them.

The price is a Choquet integral: slice the combined payoff into level
sets, cap each slice's probability, and add the slices up.  The stakes
that realise the gain come from the dual side of the same computation,
and the result carries a certificate that can be re-checked from scratch.
"""

from dutchbook import (
    decompose,
    exploitability,
    first_free_gamble,
    format_decimal,
    format_rational,
    load_fixture_market,
    strategy_for_coupon,
    upper_event,
    upper_pmf_from_odds,
    verify_certificate,
)

market = load_fixture_market("three_bookmakers.csv")
forest = market.table("Forest")
space = forest.space
d, l = space.outcome("D"), space.outcome("L")

print("The customer bets 5 on D at 13/5, then spends the free coupon")
print("(worth the 5 staked) on L at 16/5.  Forest's combined payoff:")
ffg = first_free_gamble(forest, d, l)
for outcome, value in ffg.gamble.items():
    print(f"  {outcome.label}: {format_rational(value)}")

parts = decompose(ffg.gamble)
pmf = upper_pmf_from_odds(forest)
print(f"\nLevel-set slices (base {format_rational(parts.base)}):")
for level in parts.levels:
    members = ", ".join(space[i].label for i in sorted(level.members))
    cap = upper_event(pmf, level.members)
    print(
        f"  +{format_rational(level.weight)} on {{{members}}}, "
        f"capped probability {format_rational(cap)}"
    )

value = exploitability(forest, ffg)
print(f"\nPrice of the combined position: {format_rational(value)} "
      f"= {format_decimal(value)}")
print("Negative: with this coupon the bookmaker is exposed to sure loss.")

report = strategy_for_coupon(forest, ffg)
print("\nStakes completing the guaranteed gain (bet at Forest's odds):")
for outcome, stake in zip(space, report.stakes):
    if stake:
        print(f"  bet {format_rational(stake)} on {outcome.label}")
print(f"Guaranteed gain: {format_rational(report.guaranteed_gain)} "
      f"= {format_decimal(report.guaranteed_gain)}")

print("\nCustomer's total payoff at every outcome:")
gambles = forest.gambles()
for w, outcome in enumerate(space):
    combined = ffg.gamble.payoffs[w] + sum(
        report.stakes[i] * gambles[i].payoffs[w] for i in range(len(space))
    )
    print(f"  if {outcome.label}: {format_rational(-combined)}")

print(f"\nCertificate re-checked from scratch: "
      f"{verify_certificate(forest, ffg.gamble, report)}")

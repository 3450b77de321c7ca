"""
Checking one bookmaker's price list for sure loss
=================================================

A bookmaker quoting fractional odds a/b on an outcome implicitly claims
its probability is at most b/(a+b): any heavier weight would make the
offer a guaranteed expected loss for them.  Summing those implied caps
over all outcomes tells the whole story.  A total of at least 1 means
some probability assignment fits under every cap and nobody can lock in
a profit against the book; a total below 1 means the odds themselves can
be combined into a guaranteed gain.
"""

from dutchbook import (
    check_asl_single,
    format_decimal,
    format_rational,
    load_fixture_market,
    over_round,
    upper_pmf_from_odds,
)

market = load_fixture_market("three_bookmakers.csv")
forest = market.table("Forest")

print("Forest quotes a match market:")
for outcome in forest.space:
    print(f"  {outcome.label}: {forest.odds_for(outcome)}")

pmf = upper_pmf_from_odds(forest)
print("\nImplied probability caps b/(a+b):")
for outcome, mass in zip(forest.space, pmf.masses):
    print(f"  {outcome.label}: {format_rational(mass)} = {format_decimal(mass)}")

verdict = check_asl_single(forest)
print(f"\nCap total: {format_rational(verdict.total)} = {format_decimal(verdict.total)}")
print(f"Avoids sure loss: {verdict.avoids}")

margin = over_round(forest)
print(f"Over-round margin: {format_decimal(margin, 2)}%")

print("\nThe witness distribution below respects every cap, so each of the")
print("bookmaker's gambles has non-negative expected value under it:")
for outcome, weight in zip(forest.space, verdict.witness):
    print(f"  p({outcome.label}) = {format_rational(weight)}")

"""Exact sure-loss detection for fractional betting odds and free coupons.

Everything is computed in exact rational arithmetic: verdicts, prices,
stakes and their optimality certificates are Fractions end to end, and
decimals only appear in display helpers.
"""

from .choquet import (
    Level,
    LevelSetDecomposition,
    UpperPMF,
    decompose,
    lower_event,
    lower_natural_extension,
    upper_event,
    upper_natural_extension,
)
from .coupons import (
    DEFAULT_RULES,
    CouponRules,
    FirstFreeGamble,
    enumerate_coupons,
    exploitability,
    first_free_gamble,
)
from .errors import (
    BaseOddsSureLossError,
    CertificateError,
    CouponRuleError,
    DataError,
    DutchbookError,
    StakeSystemError,
    SureLossError,
)
from .io import (
    load_fixture_market,
    load_market,
    market_to_csv,
    parse_market_csv,
    parse_wide_market_csv,
    wide_to_long_csv,
)
from .model import (
    FractionalOdds,
    Gamble,
    Market,
    OddsTable,
    Outcome,
    OutcomeSpace,
    Rational,
    as_rational,
    format_decimal,
    format_rational,
    gamble_from_odds,
    indicator,
    negate,
    scale_odds,
)
from .strategy import (
    DualSolution,
    StrategyReport,
    best_strategy,
    certificate_failures,
    construct_dual,
    order_outcomes,
    solve_stakes,
    strategy_for_coupon,
    verify_certificate,
)
from .sureloss import (
    ASLVerdict,
    check_asl_market,
    check_asl_single,
    expectation_sign_check,
    max_odds,
    over_round,
    upper_pmf_from_odds,
)

__version__ = "0.1.0"

__all__ = [
    "ASLVerdict",
    "BaseOddsSureLossError",
    "CertificateError",
    "CouponRuleError",
    "CouponRules",
    "DEFAULT_RULES",
    "DataError",
    "DualSolution",
    "DutchbookError",
    "FirstFreeGamble",
    "FractionalOdds",
    "Gamble",
    "Level",
    "LevelSetDecomposition",
    "Market",
    "OddsTable",
    "Outcome",
    "OutcomeSpace",
    "Rational",
    "StakeSystemError",
    "StrategyReport",
    "SureLossError",
    "UpperPMF",
    "as_rational",
    "best_strategy",
    "certificate_failures",
    "check_asl_market",
    "check_asl_single",
    "construct_dual",
    "decompose",
    "enumerate_coupons",
    "expectation_sign_check",
    "exploitability",
    "first_free_gamble",
    "format_decimal",
    "format_rational",
    "gamble_from_odds",
    "indicator",
    "load_fixture_market",
    "load_market",
    "lower_event",
    "lower_natural_extension",
    "market_to_csv",
    "max_odds",
    "negate",
    "order_outcomes",
    "over_round",
    "parse_market_csv",
    "parse_wide_market_csv",
    "scale_odds",
    "solve_stakes",
    "strategy_for_coupon",
    "upper_event",
    "upper_natural_extension",
    "upper_pmf_from_odds",
    "verify_certificate",
    "wide_to_long_csv",
]

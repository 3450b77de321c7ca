import pytest

from dutchbook import OddsTable, OutcomeSpace, load_fixture_market


@pytest.fixture(scope="session")
def three_market():
    return load_fixture_market("three_bookmakers.csv")


@pytest.fixture(scope="session")
def forest(three_market):
    return three_market.table("Forest")


@pytest.fixture(scope="session")
def euro_market():
    return load_fixture_market("euro2016.csv")


@pytest.fixture(scope="session")
def bet2(euro_market):
    return euro_market.table("Bet2")


@pytest.fixture
def table_of():
    """Build a one-bookmaker table from {outcome label: odds text}."""

    def build(odds, bookmaker="Book"):
        space = OutcomeSpace.from_labels(odds)
        return OddsTable.from_mapping(bookmaker, space, odds)

    return build

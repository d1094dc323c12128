import pytest

from zetamass.curvezeta import CurveData

_criteria: dict[int, list[bool]] = {}


@pytest.fixture(scope="session")
def E2():
    """Elliptic curve over F_2 with 3 rational points: P = 1 + 2T^2."""
    return CurveData(2, 1, (1, 0, 2))


@pytest.fixture(scope="session")
def E2b():
    """Elliptic curve over F_2 with 5 rational points: P = 1 + 2T + 2T^2."""
    return CurveData(2, 1, (1, 2, 2))


@pytest.fixture(scope="session")
def P1_F2():
    return CurveData(2, 0, (1,))


@pytest.fixture(scope="session")
def genus2():
    """y^2 + y = x^5 over F_2, built from brute-force point counts."""
    from oracles import count_points_y2_plus_y_eq_x5

    counts = [count_points_y2_plus_y_eq_x5(m) for m in (1, 2)]
    return CurveData.from_counts(2, 2, counts)


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    ok = call.excinfo is None
    _criteria.setdefault(int(marker.args[0]), []).append(ok)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        status = "PASS" if all(_criteria[num]) else "FAIL"
        terminalreporter.write_line(f"criterion {num:2d}: {status} ({len(_criteria[num])} checks)")

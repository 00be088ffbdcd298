"""Shared fixtures: the India and Saudi case studies and their
reference values, frozen at table precision. Also the acceptance
reporting hooks: one PASS/FAIL line per acceptance criterion and the
whole-suite runtime budget."""
import time
from pathlib import Path

import numpy as np
import pytest

_SUITE_T0 = time.perf_counter()
_SUITE_BUDGET_SECONDS = 10.0
_acceptance_results = []
_acceptance_ran = False

from somit import (
    ComparisonSession,
    CriterionSpec,
    DecisionProblem,
    Direction,
    HierarchySpec,
    make_session,
)

DATA_DIR = Path(__file__).parent / "data"

INDIA_CRITERIA = [
    ("C1", "Total Installed Cost", "$/kW", Direction.COST, "Financial"),
    ("C2", "O&M Cost", "$/kW/y", Direction.COST, "Financial"),
    ("C3", "LCOE", "$/kWh", Direction.COST, "Financial"),
    ("C4", "Efficiency", "%", Direction.BENEFIT, "Technical"),
    ("C5", "Capacity Factor", "%", Direction.BENEFIT, "Technical"),
    ("C6", "Technical Maturity", "", Direction.BENEFIT, "Technical"),
    ("C7", "GHG Emissions", "gCO2/kWh", Direction.COST, "Environmental"),
    ("C8", "Land Requirement", "m2/kW", Direction.COST, "Environmental"),
    ("C9", "Job Creation", "Job-years/GWh", Direction.BENEFIT, "Social"),
    ("C10", "Social Acceptance", "", Direction.BENEFIT, "Social"),
]

INDIA_ALTERNATIVES = ["Solar", "Wind", "Hydro", "Biomass"]

INDIA_MATRIX = [
    [596, 9, 0.038, 22, 19, 4, 48, 12, 0.87, 4.58],
    [1038, 28, 0.04, 35, 33, 4, 11, 250, 0.17, 4.17],
    [1817, 45.425, 0.065, 76.61, 57, 5, 24, 500, 0.27, 3.56],
    [1154, 46.16, 0.057, 84.33, 68, 3, 230, 13, 0.21, 4.00],
]

# Reference columns for the India case, at published 4-dp precision.
INDIA_GROUP_WEIGHTS = (0.3900, 0.3343, 0.1056, 0.1701)
INDIA_GROUP_Z = 0.017595
INDIA_FINANCIAL_SHARES = (0.4135, 0.2966, 0.2899)
INDIA_SUBJECTIVE = (0.1613, 0.1157, 0.1131, 0.1114, 0.1114,
                    0.1114, 0.0528, 0.0528, 0.0850, 0.0850)
INDIA_OBJECTIVE = (0.0830, 0.1113, 0.1235, 0.1263, 0.1129,
                   0.0758, 0.0841, 0.1126, 0.0823, 0.0884)
INDIA_FINAL = (0.1335, 0.1285, 0.1393, 0.1405, 0.1255,
               0.0843, 0.0443, 0.0593, 0.0698, 0.0750)
INDIA_MEDIANS = (0.4095, 0.7458, 0.3889, 0.5424, 0.5306,
                 0.5, 0.1142, 0.2449, 0.1, 0.5147)
INDIA_AADM = (0.2738, 0.3672, 0.4074, 0.4169, 0.3724,
              0.2500, 0.2774, 0.3714, 0.2714, 0.2917)
INDIA_NORMALIZED = [
    [0, 0, 0, 0, 0, 0.5, 0.1689, 0, 1, 1],
    [0.3620, 0.5113, 0.0741, 0.2086, 0.2857, 0.5, 0, 0.4877, 0, 0.5980],
    [1, 0.9802, 1, 0.8761, 0.7755, 1, 0.0594, 1, 0.1429, 0],
    [0.4570, 1, 0.7037, 1, 1, 0, 1, 0.0020, 0.0571, 0.4314],
]
INDIA_WEIGHTED = [
    [0.0323, 0.0163, 0.0516, 0.0255, 0.0247, 0.0415, 0.0090, 0.0013, 0.0639, 0.0420],
    [0.0563, 0.0506, 0.0543, 0.0406, 0.0429, 0.0415, 0.0021, 0.0265, 0.0125, 0.0382],
    [0.0985, 0.0821, 0.0883, 0.0888, 0.0741, 0.0519, 0.0045, 0.0530, 0.0198, 0.0326],
    [0.0626, 0.0834, 0.0774, 0.0978, 0.0884, 0.0311, 0.0431, 0.0014, 0.0154, 0.0366],
]
INDIA_PIS = (0.0323, 0.0163, 0.0516, 0.0978, 0.0884,
             0.0519, 0.0021, 0.0013, 0.0639, 0.0420)
INDIA_NIS = (0.0985, 0.0834, 0.0883, 0.0255, 0.0247,
             0.0311, 0.0431, 0.0530, 0.0125, 0.0326)
INDIA_S_PLUS = (0.0971, 0.1025, 0.1227, 0.1029)
INDIA_S_MINUS = (0.1300, 0.0842, 0.0918, 0.1157)
INDIA_SCORES = (0.5725, 0.4511, 0.4279, 0.5293)
INDIA_ORDER = ("Solar", "Biomass", "Wind", "Hydro")

AHP_GROUP_MATRIX = [
    [1, 2, 4, 2],
    [1 / 2, 1, 3, 5],
    [1 / 4, 1 / 3, 1, 2],
    [1 / 2, 1 / 5, 1 / 2, 1],
]
AHP_GROUP_WEIGHTS = (0.4257, 0.3401, 0.1297, 0.1045)
AHP_FINANCIAL_MATRIX = [
    [1, 1.5, 1.3],
    [1 / 1.5, 1, 1 / 0.8],
    [1 / 1.3, 0.8, 1],
]
AHP_FINANCIAL_SHARES = (0.4108, 0.3095, 0.2797)
AHP_TEN = (0.1749, 0.1318, 0.1191, 0.1134, 0.1134,
           0.1134, 0.0649, 0.0649, 0.0523, 0.0523)

SAUDI_CRITERIA = [
    ("C1", "Capital Cost", "USD/MW", Direction.COST, None),
    ("C2", "O&M Cost", "USD/kW-year", Direction.COST, None),
    ("C3", "Energy Cost", "USD/kWh", Direction.COST, None),
    ("C4", "Job Creation", "job-year/GWh", Direction.BENEFIT, None),
    ("C5", "Land Use", "m2/GWh", Direction.COST, None),
    ("C6", "GHG Emissions", "tCO2e/MWh", Direction.COST, None),
    ("C7", "Efficiency", "%", Direction.BENEFIT, None),
    ("C8", "Resource Availability", "kWh/m2/year", Direction.BENEFIT, None),
]

SAUDI_ALTERNATIVES = ["Solar PV", "Solar Thermal", "Wind", "Geothermal", "Biomass"]

SAUDI_MATRIX = [
    [3873, 39.55, 0.27, 0.87, 150, 0.07, 12, 2130],
    [5067, 67.26, 0.23, 0.23, 40, 0.02, 21, 2200],
    [2213, 24.69, 0.08, 0.17, 200, 0.04, 35, 570],
    [6243, 132, 0.07, 0.25, 100, 0.04, 16, 100],
    [8312, 460.47, 0.05, 0.21, 25, 0.1, 25, 200],
]

SAUDI_SUBJECTIVE = (0.2289, 0.1642, 0.0806, 0.0836,
                    0.0710, 0.0433, 0.0836, 0.2448)
SAUDI_OBJECTIVE = (0.1187, 0.1036, 0.1476, 0.0904,
                   0.1392, 0.1175, 0.1189, 0.1640)
SAUDI_FINAL = (0.2111, 0.1322, 0.0924, 0.0587,
               0.0768, 0.0396, 0.0773, 0.3120)
SAUDI_SCORES = (0.7562, 0.7556, 0.4997, 0.3312, 0.2281)
SAUDI_ORDER = ("Solar PV", "Solar Thermal", "Wind", "Geothermal", "Biomass")


def _criteria(rows):
    return [CriterionSpec(code=c, name=n, unit=u, direction=d, group=g)
            for c, n, u, d, g in rows]


def build_india_problem() -> DecisionProblem:
    return DecisionProblem(_criteria(INDIA_CRITERIA), INDIA_ALTERNATIVES,
                           INDIA_MATRIX)


def build_india_group_session() -> ComparisonSession:
    return make_session(
        ["Financial", "Technical", "Environmental", "Social"], "Environmental",
        {"Financial": 4.0, "Technical": 3.0, "Social": 0.5}, 2.0)


def build_india_hierarchy() -> HierarchySpec:
    financial = make_session(["C1", "C2", "C3"], "C2",
                             {"C1": 1.5, "C3": 0.8}, 1.3)
    technical = make_session(["C4", "C5", "C6"], "C4",
                             {"C5": 1.0, "C6": 1.0}, 1.0)
    environmental = make_session(["C7", "C8"], "C7", {"C8": 1.0})
    social = make_session(["C9", "C10"], "C9", {"C10": 1.0})
    return HierarchySpec(build_india_group_session(), {
        "Financial": financial,
        "Technical": technical,
        "Environmental": environmental,
        "Social": social,
    })


def build_saudi_problem() -> DecisionProblem:
    return DecisionProblem(_criteria(SAUDI_CRITERIA), SAUDI_ALTERNATIVES,
                           SAUDI_MATRIX)


def build_saudi_session() -> ComparisonSession:
    return make_session(
        [f"C{k}" for k in range(1, 9)], "C3",
        {"C1": 3.0, "C2": 2.0, "C4": 1.0, "C5": 0.25,
         "C6": 0.5, "C7": 1.0, "C8": 3.0},
        3.0)


@pytest.fixture
def india_problem():
    return build_india_problem()


@pytest.fixture
def india_group_session():
    return build_india_group_session()


@pytest.fixture
def india_hierarchy():
    return build_india_hierarchy()


@pytest.fixture
def saudi_problem():
    return build_saudi_problem()


@pytest.fixture
def saudi_session():
    return build_saudi_session()


@pytest.fixture
def data_dir():
    return DATA_DIR


def assert_close(actual, expected, tol, label=""):
    actual = np.asarray(actual, dtype=float)
    expected = np.asarray(expected, dtype=float)
    gap = np.abs(actual - expected).max()
    assert gap <= tol, f"{label}: max deviation {gap} > {tol}\n{actual}\nvs\n{expected}"


def pytest_runtest_logreport(report):
    global _acceptance_ran
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance_ran = True
        _acceptance_results.append((report.nodeid.split("::")[-1],
                                    report.passed))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for name, ok in _acceptance_results:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}")
    elapsed = time.perf_counter() - _SUITE_T0
    ok = elapsed < _SUITE_BUDGET_SECONDS
    terminalreporter.write_line(
        f"{'PASS' if ok else 'FAIL'}  suite_runtime "
        f"({elapsed:.2f}s, budget {_SUITE_BUDGET_SECONDS:.0f}s)")


def pytest_sessionfinish(session, exitstatus):
    if not _acceptance_ran:
        return
    if time.perf_counter() - _SUITE_T0 >= _SUITE_BUDGET_SECONDS:
        session.exitstatus = 1

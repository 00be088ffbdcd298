"""Decision problems shared by the demo scripts."""
from somit import (
    CriterionSpec,
    DecisionProblem,
    Direction,
    HierarchySpec,
    make_session,
)


def india_problem() -> DecisionProblem:
    criteria = [
        CriterionSpec("C1", "Total Installed Cost", "$/kW", Direction.COST, "Financial"),
        CriterionSpec("C2", "O&M Cost", "$/kW/y", Direction.COST, "Financial"),
        CriterionSpec("C3", "LCOE", "$/kWh", Direction.COST, "Financial"),
        CriterionSpec("C4", "Efficiency", "%", Direction.BENEFIT, "Technical"),
        CriterionSpec("C5", "Capacity Factor", "%", Direction.BENEFIT, "Technical"),
        CriterionSpec("C6", "Technical Maturity", "", Direction.BENEFIT, "Technical"),
        CriterionSpec("C7", "GHG Emissions", "gCO2/kWh", Direction.COST, "Environmental"),
        CriterionSpec("C8", "Land Requirement", "m2/kW", Direction.COST, "Environmental"),
        CriterionSpec("C9", "Job Creation", "Job-years/GWh", Direction.BENEFIT, "Social"),
        CriterionSpec("C10", "Social Acceptance", "", Direction.BENEFIT, "Social"),
    ]
    matrix = [
        [596, 9, 0.038, 22, 19, 4, 48, 12, 0.87, 4.58],
        [1038, 28, 0.04, 35, 33, 4, 11, 250, 0.17, 4.17],
        [1817, 45.425, 0.065, 76.61, 57, 5, 24, 500, 0.27, 3.56],
        [1154, 46.16, 0.057, 84.33, 68, 3, 230, 13, 0.21, 4.00],
    ]
    return DecisionProblem(criteria, ["Solar", "Wind", "Hydro", "Biomass"],
                           matrix)


def india_hierarchy() -> HierarchySpec:
    groups = make_session(
        ["Financial", "Technical", "Environmental", "Social"], "Environmental",
        {"Financial": 4.0, "Technical": 3.0, "Social": 0.5}, 2.0)
    return HierarchySpec(groups, {
        "Financial": make_session(["C1", "C2", "C3"], "C2",
                                  {"C1": 1.5, "C3": 0.8}, 1.3),
        "Technical": make_session(["C4", "C5", "C6"], "C4",
                                  {"C5": 1.0, "C6": 1.0}, 1.0),
        "Environmental": make_session(["C7", "C8"], "C7", {"C8": 1.0}),
        "Social": make_session(["C9", "C10"], "C9", {"C10": 1.0}),
    })


def saudi_problem() -> DecisionProblem:
    criteria = [
        CriterionSpec("C1", "Capital Cost", "USD/MW", Direction.COST),
        CriterionSpec("C2", "O&M Cost", "USD/kW-year", Direction.COST),
        CriterionSpec("C3", "Energy Cost", "USD/kWh", Direction.COST),
        CriterionSpec("C4", "Job Creation", "job-year/GWh", Direction.BENEFIT),
        CriterionSpec("C5", "Land Use", "m2/GWh", Direction.COST),
        CriterionSpec("C6", "GHG Emissions", "tCO2e/MWh", Direction.COST),
        CriterionSpec("C7", "Efficiency", "%", Direction.BENEFIT),
        CriterionSpec("C8", "Resource Availability", "kWh/m2/year",
                      Direction.BENEFIT),
    ]
    matrix = [
        [3873, 39.55, 0.27, 0.87, 150, 0.07, 12, 2130],
        [5067, 67.26, 0.23, 0.23, 40, 0.02, 21, 2200],
        [2213, 24.69, 0.08, 0.17, 200, 0.04, 35, 570],
        [6243, 132, 0.07, 0.25, 100, 0.04, 16, 100],
        [8312, 460.47, 0.05, 0.21, 25, 0.1, 25, 200],
    ]
    return DecisionProblem(
        criteria,
        ["Solar PV", "Solar Thermal", "Wind", "Geothermal", "Biomass"],
        matrix)


def saudi_session():
    return make_session(
        [f"C{k}" for k in range(1, 9)], "C3",
        {"C1": 3.0, "C2": 2.0, "C4": 1.0, "C5": 0.25,
         "C6": 0.5, "C7": 1.0, "C8": 3.0},
        3.0)

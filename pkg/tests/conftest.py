"""Shared pytest wiring.

The only thing living here is the acceptance summary: after a run that
touched ``test_acceptance.py`` we print one PASS/FAIL line per criterion,
so the gate can be read off the terminal without grepping the dots.
"""

import sys

_CRITERIA = {
    1: "every catalog case (defaults + parameter grid) passes the full axiom suite; detected Q-type matches",
    2: "free-ideal components have exact ranks 17 at (3,0)/(0,3) and 66 at (2,1)/(1,2)",
    3: "reduced-model dimensions equal (k+1)(l+1)(k+l+2)/2 through total degree 6 (degree 4 symbolically)",
    4: "presentation-model dimensions are the squares of the reduced ones through total degree 3; (2,1) gives 225",
    5: "the two-colour Hecke identity suite holds for every case at every (k,l) with k+l <= 4",
    6: "the projector solves by null space, agrees with the recurrence, and satisfies the kernel sandwich",
    7: "random flip/rescale/base-change transforms preserve all verifiers and the stated Q laws",
    8: "the elliptic sample passes axioms and case conditions; its dimension sweep is reported as evidence",
    9: "the classical point has kernel ranks 6 and 8 and a swap-symmetric quadratic span",
    10: "out-of-scope topics are documented and have no API surface",
}


def _acceptance_notes():
    for name in ("test_acceptance", "tests.test_acceptance"):
        mod = sys.modules.get(name)
        if mod is not None:
            return getattr(mod, "NOTES", {})
    return {}


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    outcomes = {}
    for category, label in (("passed", "PASS"), ("failed", "FAIL"), ("error", "ERROR")):
        for rep in terminalreporter.stats.get(category, ()):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_criterion_" not in nodeid:
                continue
            tail = nodeid.split("test_criterion_", 1)[1]
            try:
                num = int(tail[:2])
            except ValueError:
                continue
            # a test both passed and errored (teardown) counts as broken
            if outcomes.get(num) != "FAIL":
                outcomes[num] = label
    if not outcomes:
        return

    notes = _acceptance_notes()
    terminalreporter.section("acceptance criteria")
    for num, text in sorted(_CRITERIA.items()):
        status = outcomes.get(num, "NOT RUN")
        terminalreporter.write_line("criterion %2d: %-7s %s" % (num, status, text))
        if num in notes:
            for line in str(notes[num]).splitlines():
                terminalreporter.write_line("              " + line)

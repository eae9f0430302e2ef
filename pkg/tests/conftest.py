import math
import os
import sys

from hypothesis import settings, strategies as st

from gentrig import validate

settings.register_profile("default", max_examples=40, deadline=None)
settings.register_profile("thorough", max_examples=1000, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def pairs(draw, p_max=6.0, q_min=0.3, q_max=6.0, gap=0.02):
    q = draw(st.floats(q_min, q_max))
    lo = q / (q + 1.0) + gap
    p = draw(st.floats(lo, max(p_max, lo + 0.1)))
    return validate(p, q)


def interior(pair, frac, end, extent=4.0):
    """A point at ``frac`` of the branch, using ``extent`` when it is unbounded."""
    if not math.isfinite(end):
        end = extent
    return frac * end


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    lines = getattr(mod, "LINES", None)
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(lines):
        terminalreporter.write_line(lines[n])

"""Shared test configuration.

Hypothesis deadlines measure wall time and misfire on loaded machines;
the acceptance gate carries the real time budget, so deadlines are off.
"""

from hypothesis import settings

settings.register_profile("exact", deadline=None)
settings.load_profile("exact")

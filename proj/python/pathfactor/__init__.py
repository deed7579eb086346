"""Path-factor analysis toolkit.

Sun recognition, the Kaneko criterion for P>=3-factors, connectivity and
binding-number invariants, hypothesis checkers for the degree/binding
theorems, and generators for their sharpness families.
"""

from ._core import *  # noqa: F401,F403
from ._core import DEFAULT_BUDGET  # noqa: F401

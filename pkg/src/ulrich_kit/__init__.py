"""Ulrich ideals and modules over local rings, computed over GF(p).

The engine works in ``K[x_1..x_n]_(x)/(f)`` with Mora standard bases for a
local weighted degree order.  Main entry points::

    from ulrich_kit import AmbientRing, ModuleData, check_ulrich_ideal
"""

__version__ = "0.1.0"

from .ring import AmbientRing, IdealData, IdealError, RingError  # noqa: E402
from .modules import ModuleData, ModuleError, linkage, resolve  # noqa: E402
from .hilbert import hilbert_samuel, regularity_report  # noqa: E402
from .ulrich import check_ulrich_ideal, check_ulrich_module  # noqa: E402

__all__ = ["AmbientRing", "IdealData", "IdealError", "RingError", "ModuleData", "ModuleError",
           "linkage", "resolve", "hilbert_samuel", "regularity_report", "check_ulrich_ideal",
           "check_ulrich_module", "__version__"]

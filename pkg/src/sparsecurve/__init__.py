"""Exact real-solution counting for a dense plane curve against a sparse one."""

from .bounds import (BoundTable, bound_table, component_bound, khovanskii,
                     khovanskii_parameters, paper_bound_general,
                     paper_bound_irreducible)
from .errors import (ExponentBudgetExceeded, NotOnCurve, ParseError,
                     SingularFiber, SparseCurveError, ZeroF)
from .implicit import (enumerate_partitions, implicit_numerator,
                       phi_derivatives, power_derivative)
from .intersect import (CountReport, CurveSystem, count_solutions, decompose,
                        oracle_count, random_system)
from .poly import DenseBiPoly, SparseBiPoly, UniPoly, parse_dense, parse_sparse
from .roots import IsolatingInterval, isolate_roots, sturm_chain
from .wronskian import (BasisFamily, build_Tjp, build_Ts, theorem1_bound,
                        wronskian_value)

__version__ = "0.1.0"

__all__ = [
    "BasisFamily", "BoundTable", "CountReport", "CurveSystem", "DenseBiPoly",
    "ExponentBudgetExceeded", "IsolatingInterval", "NotOnCurve", "ParseError",
    "SingularFiber", "SparseBiPoly", "SparseCurveError", "UniPoly", "ZeroF",
    "bound_table", "build_Tjp", "build_Ts", "component_bound", "count_solutions",
    "decompose", "enumerate_partitions", "implicit_numerator", "isolate_roots",
    "khovanskii", "khovanskii_parameters", "oracle_count", "paper_bound_general",
    "paper_bound_irreducible", "parse_dense", "parse_sparse", "phi_derivatives",
    "power_derivative", "random_system", "sturm_chain", "theorem1_bound",
    "wronskian_value",
]

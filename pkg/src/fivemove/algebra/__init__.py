from .laurent import LaurentPoly, LaurentPoly2
from .cyclotomic import Cyclo40
from .quotient import QuotClass, PolyQuotient, equal_up_to_unit, reduce_mod, reduce_mod_ideal_5
from .chebyshev import chebyshev_T, v1, v2, v2_identity_holds

__all__ = [
    "LaurentPoly",
    "LaurentPoly2",
    "Cyclo40",
    "QuotClass",
    "PolyQuotient",
    "reduce_mod",
    "reduce_mod_ideal_5",
    "equal_up_to_unit",
    "chebyshev_T",
    "v1",
    "v2",
    "v2_identity_holds",
]

"""Machine-checked Edwards-curve group law.

Subpackages:

* :mod:`edwards_law.ffield` -- prime-field arithmetic.
* :mod:`edwards_law.mpoly` -- exact multivariate polynomials, division and
  Groebner bases.
* :mod:`edwards_law.identities` -- the symbolic addition laws and the
  certificates behind the group law.
* :mod:`edwards_law.curve` -- concrete curves over F_p and axiom checks.
"""

from .ffield import FieldElement, PrimeField, is_prime

__version__ = "0.1.0"

__all__ = ["FieldElement", "PrimeField", "is_prime", "__version__"]

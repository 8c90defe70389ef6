"""Exact free-field realizations for sl_n: finite and affine homomorphisms,
relaxed Verma / Wakimoto modules, admissible weights and nilpotent orbits.

All arithmetic is done over the rationals (fractions.Fraction); there is no
floating point anywhere in the package.
"""

__version__ = "0.1.0"

"""Exact-arithmetic toolkit for plabic graphs, r-dimer covers, SL_r webs,
web pairings, and twisted boundary measurements.

Everything is computed over the rationals (fractions.Fraction); no floats
enter any identity check.
"""

__version__ = "0.1.0"

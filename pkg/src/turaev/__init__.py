"""Knot diagram invariants from signed DT codes.

The package realizes signed Dowker-Thistlethwaite codes as planar
diagrams, computes Kauffman bracket and Jones polynomials with exact
integer arithmetic, derives the Turaev genus from the extreme state
loop counts, manipulates rational tangle words, and verifies a bundled
census of almost alternating knots end to end.
"""

from __future__ import annotations

__version__ = "0.1.0"

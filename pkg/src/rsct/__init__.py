"""Row-strict composition tableaux and Plücker-monomial bases of Schur modules."""

__version__ = "0.1.0"

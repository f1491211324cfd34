"""plocal: fusion systems, chamber systems and parabolic families of
finite permutation groups, with exhaustive certification of their axioms."""

__version__ = "0.1.0"

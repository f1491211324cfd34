"""Hard caps for the exhaustive algorithms.

All values are configuration, not heuristics: passing a cap raises
errors.CapExceeded, never degrades to an approximation.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class Caps:
    enumeration: int = 10**6     # max group order for element closure
    lattice: int = 10**4         # max |G| for full subgroup-lattice enumeration
    isomorphism: int = 10**4     # max |G| for isomorphism backtracking
    chambers: int = 10**5        # max number of chambers
    sylow_p_group: int = 64      # max |S| carrying a fusion system
    coset_rows: int = 10**5      # default row limit for coset enumeration
    factor_depth: int = 10**4    # BFS bound for morphism factorisation


DEFAULT_CAPS = Caps()

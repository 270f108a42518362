"""Combinatorics of spin blocks: p-bar cores, crystals, Scopes
involutions, reduction of cores and the twisted affine coordinates."""

from .abacus import CoreTuple, core_from_tuple, core_tuple, pbar_core, rank_from_tuple
from .donovan import donovan_bound, reduce_core, rock_core
from .scopes import apply_K, apply_K_tuple

__version__ = "0.1.0"

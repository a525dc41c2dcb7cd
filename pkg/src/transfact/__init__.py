"""Exact counting of permutation factorizations, maps, Jack series and Hurwitz numbers."""
from .core import COMPOSITION, GenusReport, Partition, Perm, cycle_type, rh_genus
from .charalg import (
    FactorizationSpec,
    character,
    factorization_count,
    product_class_coefficient,
    transitive_factorization_count,
)
from .brute import (
    BudgetExceeded,
    SearchBudget,
    enumerate_decorated_maps,
    enumerate_factorizations,
    enumerate_transitive_factorizations,
    factorization_census,
)
from .maps import MapTriple, TripleRejected, count_rooted_hypermaps, map_genus, validate_triple
from .ratfunc import AlphaRational
from .jackseries import b_conjecture_scan, jack, jack_norm, psi_series, schur_series
from .hurwitz import (
    HurwitzQuery,
    JoinCutTable,
    double_hurwitz,
    double_piecewise_probe,
    hurwitz_char,
    joincut_table,
    lagrange_consistency_check,
    polynomiality_probe,
)

__version__ = "0.1.0"

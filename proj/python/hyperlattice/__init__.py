"""Bruhat order on Latin squares and alternating sign hypermatrices.

Thin wrapper around the compiled _hyperlattice extension. The corner-sum
orientation is fixed throughout: larger corner sums sit lower in the order,
join is the entrywise minimum and meet the entrywise maximum.
"""

from ._hyperlattice import (
    CapExceeded,
    CornerSumHypermatrix,
    Hypermatrix,
    LatinSquare,
    Matrix,
    MonotoneHypertriangle,
    TBlock,
    apply_tblock,
    asm_rank,
    bruhat_leq,
    construct_un,
    covered_elements,
    covers_in_lattice,
    dm_witness_report,
    enumerate_ashm,
    enumerate_corner_sum,
    enumerate_latin,
    enumerate_monotone_hypertriangles,
    enumerate_pashm,
    from_triangle,
    hasse,
    is_ashm,
    is_asm,
    is_distributive_triple,
    is_in_xi_preimage,
    is_latin,
    is_monotone_hypertriangle,
    is_pashm,
    join,
    join_irreducibles,
    lattice_rank,
    m_closed_form,
    maximum_element,
    meet,
    minimum_element,
    plane_sum,
    rank_of,
    rank_profile,
    rho,
    sigma,
    sigma_inverse,
    tblock_witness,
    to_latin_square,
    to_triangle,
    triangle_leq,
    xi,
    xi_inverse,
)

__all__ = [
    "CapExceeded",
    "CornerSumHypermatrix",
    "Hypermatrix",
    "LatinSquare",
    "Matrix",
    "MonotoneHypertriangle",
    "TBlock",
    "apply_tblock",
    "asm_rank",
    "bruhat_leq",
    "construct_un",
    "covered_elements",
    "covers_in_lattice",
    "dm_witness_report",
    "enumerate_ashm",
    "enumerate_corner_sum",
    "enumerate_latin",
    "enumerate_monotone_hypertriangles",
    "enumerate_pashm",
    "from_triangle",
    "hasse",
    "is_ashm",
    "is_asm",
    "is_distributive_triple",
    "is_in_xi_preimage",
    "is_latin",
    "is_monotone_hypertriangle",
    "is_pashm",
    "join",
    "join_irreducibles",
    "lattice_rank",
    "m_closed_form",
    "maximum_element",
    "meet",
    "minimum_element",
    "plane_sum",
    "rank_of",
    "rank_profile",
    "rho",
    "sigma",
    "sigma_inverse",
    "tblock_witness",
    "to_latin_square",
    "to_triangle",
    "triangle_leq",
    "xi",
    "xi_inverse",
]

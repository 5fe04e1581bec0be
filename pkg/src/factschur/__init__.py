"""Products of factorial Schur functions expanded in the Schur basis."""

from .changebasis import (
    c_coeff_det,
    complement,
    compose_via_classical,
    d_coeff_det,
    d_coeff_dual,
    e_coefficient,
    e_expand,
    expand_factorial_in_schur,
    expand_schur_in_factorial,
    matrix_AB,
    partition_to_index_set,
)
from .lrrule import (
    CoeffTable,
    enumerate_lr_tableaux,
    factorial_schur,
    lr_coefficient,
    lr_expand,
    oracle_coefficient,
    oracle_expand,
    product_factorial_schur,
    schur,
    specialize,
)
from .polyring import Polynomial, alternant, complete_sym, elementary_sym, x, y
from .tableaux import (
    BarredTableau,
    MultiShape,
    apply_permutation,
    bad_guy_pair,
    bender_knuth,
    classify_entry,
    enumerate_barred,
    enumerate_semistandard,
    is_yamanouchi,
    split_columns,
    unbarred_column_word,
    unbarred_content,
    weight,
)

__version__ = "0.1.0"

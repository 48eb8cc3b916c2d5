"""Quasi-crystals, the quasi-tensor product, free quasi-crystal monoids and the hypoplactic congruence."""

from .errors import (
    BudgetExceeded,
    IndexOutOfRange,
    InvalidPair,
    MismatchedType,
    NonIntegralPairing,
    NotSeminormal,
    QuasiCrystalError,
    RankTooSmall,
    UnknownElement,
    UnsupportedAlphabet,
    WordParseError,
)
from .hypoplactic import (
    C2NormalForm,
    Family,
    check_identity,
    classical_congruent_A,
    commutative_witness,
    embed_A_to_C,
    embed_C_to_C,
    inv_signature,
    is_commutative,
    is_idempotent,
    normal_form_C2,
)
from .qc_core import (
    NEG_INF,
    POS_INF,
    QuasiCrystalTable,
    check_homomorphism,
    element_class,
    fixture_A3_squared,
    fixture_Q2,
    is_seminormal,
    standard_A,
    standard_C,
    validate_quasicrystal,
)
from .qgraph import Component, congruent, explore, export, hw_words, lw_words
from .qtensor import ONE, ZERO, Pair, qtensor, sig_mul, sig_of
from .rootsys import RootData, pairing, type_a, type_c, validate_root_axioms, weight_leq
from .word_monoid import (
    StandardAlphabet,
    TableAlphabet,
    alphabet,
    bar,
    has_inversion,
    parse_word,
    word_class,
    word_e,
    word_f,
    word_sig,
    word_wt,
)

from ._gnd import (
    check,
    decide,
    deduction_theorem,
    elaborate,
    int_provable,
    parse_formula,
    parse_sequent,
    prove,
    translate,
    translate_formula,
)

__all__ = [
    "check",
    "decide",
    "deduction_theorem",
    "elaborate",
    "int_provable",
    "parse_formula",
    "parse_sequent",
    "prove",
    "translate",
    "translate_formula",
]

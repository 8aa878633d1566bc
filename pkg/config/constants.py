"""Constants for the Hecke lattice toolkit."""


class GeneratorKind:
    """Hecke operator generator kinds."""
    S = "T_s"
    U = "T_u"
    U_INV = "T_u_inv"
    TORUS = "T_t"

    ALL = {S, U, U_INV, TORUS}


class Relation:
    """Relation names checked on Hecke and W-type modules."""
    COMMUTE = "R1"
    BRAID = "R2"
    U_INVERSE = "R3"
    CONJUGATION = "R4"
    TORUS_PRODUCT = "R5"
    TORUS_EXCHANGE = "R6"

    ALL = {COMMUTE, BRAID, U_INVERSE, CONJUGATION, TORUS_PRODUCT, TORUS_EXCHANGE}
    MOD_P = {COMMUTE, BRAID, U_INVERSE, TORUS_PRODUCT, TORUS_EXCHANGE}


class EquinabMode:
    """Which reflections enter the descent inequality check."""
    FULL = "full"
    S_D_ONLY = "s_d_only"

    ALL = {FULL, S_D_ONLY}


class Inequality:
    """Which side of a two-sided inequality failed."""
    SUM = "sum"
    UPPER = "upper"
    LOWER = "lower"


class ExitCode:
    """Process exit codes of the command line."""
    OK = 0
    FALSE_VERDICT = 1
    USAGE = 2


class SuiteCheck:
    """Acceptance battery check names."""
    REDUCTION = "weight_reduction"
    REVERSAL = "weight_reversal"
    NABLA = "nabla_construction"
    STABILITY = "stability_equivalence"
    ORACLE = "oracle_equality"
    RELATIONS = "relation_suite"
    CRITERION = "criterion_equivalence"
    DUALITY = "duality"
    REDUCTION_COINCIDENCE = "reduction_coincidence"
    REALIZATION = "realization"

    ALL = [
        REDUCTION, REVERSAL, NABLA, STABILITY, ORACLE,
        RELATIONS, CRITERION, DUALITY, REDUCTION_COINCIDENCE, REALIZATION,
    ]

"""Exact weight multiplicities of simple modules for quantum groups at roots of unity."""
from .characters import MultiplicityTable, character_table, matrix_rank, weight_multiplicity
from .coefficients import FieldSpec, InvalidSpec, make_field, parse_field_spec, specialize
from .gram import GramMatrix, GramSession, gram_entry, gram_matrix, gram_raw
from .laurent import (LaurentPoly, NonExactDivision, cyclotomic, exact_div, mod_cyclotomic, qbinom,
                      qfact, qint)
from .oracles import freudenthal_multiplicity, lucas_predictor
from .rootsystem import RootSystem, from_cartan, load_root_system

__version__ = "0.1.0"

"""Milnor mu-bar invariants of links from braid words or PD codes."""

from .diagrams import PDCode, closure, linking_number, reidemeister_move
from .invariants import MuTable, first_nonvanishing, indeterminacy, mu, mu_table, mubar
from .linkfile import parse_link, print_link, read_link, write_link
from .longitudes import PeripheralData, braid_longitudes, peripheral_data, wirtinger_longitudes
from .obstructions import ObstructionReport, bipolar_obstruction, grope_obstruction, kcobordism_check, solvability_obstruction
from .operators import DoublingSpec, bing_double, braid_commutator_link, iterated_bing_double, stack, twisted_whitehead
from .series import GradedSeries, TruncatedSeries, coefficient, magnus_expand
from .words import BraidWord, Word, parse_braid, parse_word

__all__ = [
    "BraidWord", "DoublingSpec", "GradedSeries", "MuTable", "ObstructionReport", "PDCode",
    "PeripheralData", "TruncatedSeries", "Word", "bing_double", "bipolar_obstruction",
    "braid_commutator_link", "braid_longitudes", "closure", "coefficient", "first_nonvanishing",
    "grope_obstruction", "indeterminacy", "iterated_bing_double", "kcobordism_check",
    "linking_number", "magnus_expand", "mu", "mu_table", "mubar", "parse_braid", "parse_link",
    "parse_word", "peripheral_data", "print_link", "read_link", "reidemeister_move",
    "solvability_obstruction", "stack", "twisted_whitehead", "wirtinger_longitudes", "write_link",
]

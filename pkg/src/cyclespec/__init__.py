"""Cycle sets of graphs: exact spectra, chord interaction cycles, fingerprints,
container encodings and a small-n census of distinct cycle sets."""

from .config import LimitExceeded, Limits, RunConfig
from .graphs import (Chord, Cycle, CycleSet, GeneralGraph, GraphError, LabelledHamGraph,
                     chord_gap, make_ham_graph, parse_graph6, parse_ham, read_graph6,
                     read_ham, rotate_labels, to_general)
from .cycles import (general_spectrum, ham_spectrum, interaction_spectrum, longest_cycle,
                     pair_cycle, pair_cycle_length, pair_kind, pairwise_spectrum, shortcut,
                     spectrum)
from .fingerprint import FingerprintResult, collision_property, fingerprint
from .containers import (Case2Witness, ContainerFamily, Encoding, chain_antichain, classify,
                         cover_check, dyadic_class, encoding_spectrum, family_prime,
                         max_independent, phi_encode, pierce_set, psi_encode,
                         psi_soundness_check, shifted_spectra, weight_sum)
from .census import (CensusRecord, PartitionReport, bounds_report, census, faudree,
                     faudree_census, theorem_partition_check)

__version__ = "0.1.0"

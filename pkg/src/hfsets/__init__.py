"""Bijective encodings between naturals and hereditarily finite sets,
hypergraphs, pairs and digraphs, plus membership graphs and decoration."""

from .errors import (CanonicalFormError, CyclicGraphError, DomainError,
                     EmptyFoldError, EmptySetInFamilyError, HFSError,
                     InvalidBaseError, InvalidDigitError, InvalidGraphError,
                     InvalidLabelsError, InvalidNaturalError,
                     InvalidUrelementError, RepresentationOverflowError,
                     ResourceLimitError, TooLargeError)
from .graphcodec import (Dag, Orientation, build_raw_dag, dag_to_dot, decorate,
                         digraph_to_nat, from_dag, from_ddag, intensional_dual,
                         nat_to_digraph, nat_to_pairs, nat_to_parts,
                         self_duals, to_compact_dag, transpose)
from .hfs import (HSet, Urelement, direct_hfs_stream, hequal, hexp2, hfold,
                  hfs_show, hfs_to_nat, hproduct, hsize, hsucc, hsum,
                  iterative_hfs_stream, list_subsets, nat_to_hfs, nfold, nsize,
                  to_hfs_lift1, to_hfs_lift2, to_hfs_liftn, to_nat_lift1,
                  to_nat_lift2, to_nat_liftn)
from .natset import (hypergraph_stream, hypergraph_to_nat, nat_adduction,
                     nat_choice_fun, nat_equal, nat_intersect, nat_ordinal,
                     nat_powset, nat_powset_alt, nat_singleton, nat_to_hypergraph,
                     nat_to_set, nat_union, nats_intersect, nats_union,
                     set_to_nat)
from .numerals import (all_bitstrings, bijbits_to_nat, from_base, from_bits,
                       nat_to_bijbits, to_base, to_bits)
from .pairing import (NatPair, bitmerge_pair, bitmerge_unpair, cantor_pair,
                      cantor_unpair, kuratowski_pair)

__version__ = "0.1.0"

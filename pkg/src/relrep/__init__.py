"""Finite algebras of binary relations under composition and intersection."""

from .algebra import (ConcreteModel, FiniteAlgebra, Representation, Verdict,
                      check_representation, extract_tables, find_isomorphism,
                      generate_closure, necessary_laws)
from .chain import (ChainCertificate, FailureReport, FiniteTriple, SymbolicTriple,
                    check_hypotheses, derive_identity_lemma, extend_chain, find_start,
                    run_chain, verify_certificate)
from .cnf import CnfInstance, decode_cnf, encode_cnf, parse_assignment
from .errors import CeilingExceeded, IntegrityError, ParseError, RelrepError
from .point import (BasisSet, compose_symbolic, intersect_symbolic, member,
                    point_algebra, symbolic_model, verify_tables, witness)
from .relation import Relation, complement, compose, difference, identity, intersect
from .search import (ExhaustedNone, Found, LimitReached, SearchOptions, SearchProblem,
                     exhaustive_scan, nonrep_certificate, search)

__version__ = "0.1.0"

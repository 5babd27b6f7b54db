"""Exact analysis of values that running averages over a finite alphabet cannot skip."""

from .alphabet import Alphabet, AffineMap, AllRational, HasIrrational, classify, make_alphabet, normalize, reflect
from .engine import CrossEvent, CrossKind, SequenceSpec, averages, detect_skip, first_upcross
from .exact import DomainError, ExactReal, compare, is_rational, make_exact, normalize_rational, sqrt
from .ivset import Direction, Empty, Family, MemberResult, characterize, enumerate_family, family_element, membership
from .oracle import CountWitness, consistency_report, integer_gap_violations, search_skip
from .witness import InvariantViolation, NotSkippable, SkipCertificate, build_skip_witness, verify_certificate

__version__ = "0.1.0"

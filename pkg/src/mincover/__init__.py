"""Minimal regular covers of prisms and antiprisms, computed from flag systems."""

__version__ = "0.1.0"

from .perm import CapExceeded, DegreeMismatch, Perm, PermGroup, compose, element_order, inverse
from .flags import (FVector, FaceListMap, FlagSystem, InvalidMap, antiprism, classify_flags, f_vector,
                    from_face_list, load_map, platonic, prism, validate)
from .words import Presentation, coxeter_plus, evaluate, free_reduce, parse_word
from .cosets import MatchReport, match_presentation, todd_coxeter
from .monodromy import MonodromyGroup, monodromy_group, schlafli_type, string_condition
from .stabilizers import (antiprism_family, lollipop_generators, prism_family, reduction_checks,
                          schreier_generators, spanning_tree, verify_generates_stabilizer)
from .covers import (closed_form, coincidence_check, cover_f_vector, euler_genus, minimal_cover_presentation,
                     prism_structure, antiprism_structure, verify_minimal_cover)

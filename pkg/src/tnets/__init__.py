"""Eulerian cycles of T-nets, their doubling, and de Bruijn sequence ranking."""

from .bijection import NuInput, lift, nu, nu_inverse, omega, project, unsplit_final
from .debruijn import DeBruijnSeq, b_split, b_unsplit, cycle_to_seq, rho, rho_inverse, seq_to_cycle, stanley_decode, stanley_encode
from .euler import EulerCycle, arborescence_count, canonical, count_cycles_best, enumerate_cycles
from .graph_core import TNet, WGraph, debruijn_graph, double, fuse, quadruple, validate_tnet
from .harness import random_tnet, verify_bound, verify_cascade, verify_doubling
from .splitting import GadgetQuad, LevelGraph, Segments, build_delta, build_levels, gadget_quad, recognize, sigma, split

__version__ = "0.1.0"

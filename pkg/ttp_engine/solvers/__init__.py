"""Solver portfolio package"""
from ttp_engine.solvers.base_pass import SearchState, SolutionPass, improves
from ttp_engine.solvers.bitflip import BitflipPass, bitflip_pass
from ttp_engine.solvers.insertion import InsertionPass, insertion_pass
from ttp_engine.solvers.ea_packing import EaPackingPass, ea_packing_pass
from ttp_engine.solvers.pack_iterative import PackIterative, pack_iterative
from ttp_engine.solvers.tour_builder import build_tour, chained_two_opt, two_opt
from ttp_engine.solvers.portfolio import PortfolioSolver, SOLVER_CYCLES, solve

__all__ = [
    'SearchState',
    'SolutionPass',
    'improves',
    'BitflipPass',
    'bitflip_pass',
    'InsertionPass',
    'insertion_pass',
    'EaPackingPass',
    'ea_packing_pass',
    'PackIterative',
    'pack_iterative',
    'build_tour',
    'chained_two_opt',
    'two_opt',
    'PortfolioSolver',
    'SOLVER_CYCLES',
    'solve'
]

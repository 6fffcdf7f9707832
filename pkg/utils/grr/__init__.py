"""Branching tree search from high-exponent starting points."""

from .config import BranchMode, GrrConfig
from .tree import BranchNode, BranchStatus, BranchTree, SolutionRecord
from .verify import SolutionVerdict, fixed_point_residual, verify_solution
from .branching import apply_branch_step, branch_directions, find_starting_point, initial_point, split_branch
from .search import run_tree_search
from .ranking import RankedCandidate, rank_starting_points

__all__ = [
    'BranchMode', 'GrrConfig',
    'BranchNode', 'BranchStatus', 'BranchTree', 'SolutionRecord',
    'SolutionVerdict', 'fixed_point_residual', 'verify_solution',
    'apply_branch_step', 'branch_directions', 'find_starting_point', 'initial_point', 'split_branch',
    'run_tree_search',
    'RankedCandidate', 'rank_starting_points',
]

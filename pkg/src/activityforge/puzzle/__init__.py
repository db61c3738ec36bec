from .grid import COMPASS, Grid, Placement, number_placements
from .crossword import CrosswordResult, CrosswordSpec, build_crossword
from .wordsearch import WordsearchResult, build_wordsearch
from .verify import Violation, verify_grid
from .kernel import BACKEND

__all__ = [
    "BACKEND",
    "COMPASS",
    "CrosswordResult",
    "CrosswordSpec",
    "Grid",
    "Placement",
    "Violation",
    "WordsearchResult",
    "build_crossword",
    "build_wordsearch",
    "number_placements",
    "verify_grid",
]

"""Generation and review of English-teaching activities.

Subpackages:
    vocab    -- curated vocabulary, embedding-based category expansion
    clues    -- pattern-based <word, clue> extraction from text
    puzzle   -- crossword and word-search construction and verification
    story    -- story-ordering exercise (sentence ranking + seeded shuffle)
    qa       -- rule-based question/answer generation
    service  -- HTTP service, persistence and activity lifecycle
"""

__version__ = "0.1.0"

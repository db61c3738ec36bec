"""Embedded word lists and token normalization helpers.

The stopword list (~150 entries) is the package default; the story module
and clue scorer accept an override loaded from a config file.
"""

from __future__ import annotations

import unicodedata

STOPWORDS = frozenset(
    """
    a about above after again against all am an and any are aren't as at be
    because been before being below between both but by can cannot can't could
    couldn't did didn't do does doesn't doing don't down during each few for
    from further had hadn't has hasn't have haven't having he her here hers
    herself him himself his how i if in into is isn't it its itself let's me
    more most mustn't my myself no nor not of off on once only or other ought
    our ours ourselves out over own same shan't she should shouldn't so some
    such than that the their theirs them themselves then there these they this
    those through to too under until up very was wasn't we were weren't what
    when where which while who whom why with won't would wouldn't you your
    yours yourself yourselves
    """.split()
)

PRONOUNS = frozenset(
    """
    i you he she it we they me him her us them my your his its our their mine
    yours hers ours theirs myself yourself himself herself itself ourselves
    yourselves themselves this that these those
    """.split()
)

ARTICLES = ("a", "an", "the")

# closed-class words that cannot be a definiendum
FUNCTION_WORDS = frozenset(
    set(PRONOUNS)
    | set(ARTICLES)
    | set("is are was were be been being do does did have has had will would can could and or but if".split())
)


def strip_diacritics(text: str) -> str:
    decomposed = unicodedata.normalize("NFKD", text)
    return "".join(c for c in decomposed if not unicodedata.combining(c))


def normalize_word(word: str) -> str | None:
    """Casefolded ASCII-letter form of a single token, or None if the token
    cannot live in a letter grid (digits, spaces, hyphens, empty)."""
    w = strip_diacritics(word.strip()).casefold()
    if not w or not w.isascii() or not w.isalpha():
        return None
    return w


def load_wordlist(path) -> frozenset[str]:
    """One word per line, '#' comments allowed."""
    words = set()
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            token = line.split("#", 1)[0].strip().casefold()
            if token:
                words.add(token)
    return frozenset(words)

"""Confluent rewriting and reduced-word combinatorics for the affine
symmetric group: deg-lex string rewriting with Buchberger-Shirshov
completion, the explicit confluent basis of the rank-n affine
presentation, the block/arranged-word classification of reduced words,
and the partition and q-binomial machinery behind the growth series.
"""

__version__ = "0.1.0"

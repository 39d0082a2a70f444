"""Iconographic and iconological knowledge-graph construction toolkit.

Stages: harvest or read Wikidata depicts statements, parse free-text
iconographic readings, align both to ICON interpretation levels, enrich them
with a symbolism knowledge base, emit RDF, and analyse and score the result.
"""

__version__ = "0.1.0"

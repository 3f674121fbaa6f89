"""
Algebra package (Betti Lab)

Overview for future devs:
- Exact algebra on monomial ideals, bottom-up:
  * monomials.py  exponent-vector arithmetic and variable sets
  * schema.py     text grammar and JSON form of ideals
  * ideals.py     minimal generating sets, dominance, hypothesis detectors
  * fields.py     Q and F_p through sympy domains
  * taylor.py     Taylor/Scarf complexes, the contract face map, cancellation
  * homology.py   strand homology oracle and BettiTable
  * decompose.py  structural decompositions
  * formatters.py text / JSON / DOT output
  * errors.py     the exception hierarchy

Usage:
- CLI and Streamlit pages go through utils.betti_engine for Betti tables and
  checks; they import from here only for parsing, printing and types.
"""

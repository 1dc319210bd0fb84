"""Exact-arithmetic toolkit for basic quantum SL(3) data.

The package verifies structure tensors over cyclotomic-rational scalars,
computes graded dimensions of the associated module and algebra models,
and solves for the Hecke-side projectors — all with exact arithmetic, so
every reported equality is an identity, not an approximation.

Scope boundaries (deliberate): the toolkit does not attempt Koszulity
certificates, does not decompose the full (infinite) Peter-Weyl style
corepresentation theory, and makes no completeness claim for the built-in
case list — it checks the cases it ships, nothing more.
"""

__version__ = "0.1.0"

"""Quotients of smooth complete toric varieties by mu_p actions.

Exact arithmetic throughout: integer and rational matrices through sympy,
finite fields through galois.
"""

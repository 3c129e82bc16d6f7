"""Regenerates molecular qubit-Hamiltonian family data files.

A compact electronic-structure pipeline (Gaussian integrals, restricted
Hartree-Fock, active-space reduction, fermion-to-qubit mappings) writes
the Hamiltonian-family JSON format consumed by the snakevqe package.
"""

from .generate import PRESETS, MoleculeSpec, generate, template_words

__version__ = "0.1.0"

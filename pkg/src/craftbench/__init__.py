"""Executable crafting-problem reductions with independent brute-force oracles."""

from craftbench.bitstring import BitString, Mode, Op, check_pair, id_encode, is_palindrome, transform
from craftbench.crafting import CraftingInstance, Method, Witness, locate, solve, verify_witness

__version__ = "0.1.0"

__all__ = ["BitString", "CraftingInstance", "Method", "Mode", "Op", "Witness", "check_pair",
           "id_encode", "is_palindrome", "locate", "solve", "transform", "verify_witness"]

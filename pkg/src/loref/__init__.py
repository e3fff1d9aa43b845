"""loref: refute left-orderability of finitely presented groups.

Core pipeline: free-group words -> relator-consequence identity sets ->
semigroup membership automata -> positive-cone case search -> certificates.
"""

__version__ = "0.1.0"

from .words import Alphabet, Generator, Word, parse_word  # noqa: F401

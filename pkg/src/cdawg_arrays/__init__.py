"""Convert the CDAWG of a text into the run-length BWT, PLCP/LPF samples and greedy parses."""

from .cdawg import Cdawg, build, strip_text, stats
from .errors import StructuralError, TextError
from .glpf import SparseGlpf, expand_glpf, glpf_at, irreducible_plcp, qirr_glpf
from .order import OrderedCdawg, annotate
from .parse import Parse, lex_parse, lz_parse
from .pipeline import Conversion, convert
from .rlbwt import RunLengthBwt, expand_bwt, rec_rbwt
from .text import Text, fibonacci, normalize, random_text, thue_morse

__all__ = [
    "Cdawg", "Conversion", "OrderedCdawg", "Parse", "RunLengthBwt", "SparseGlpf",
    "StructuralError", "Text", "TextError", "annotate", "build", "convert",
    "expand_bwt", "expand_glpf", "fibonacci", "glpf_at", "irreducible_plcp",
    "lex_parse", "lz_parse", "normalize", "qirr_glpf", "random_text", "rec_rbwt",
    "stats", "strip_text", "thue_morse",
]

"""Bancada de codigos MDS nao-Reed-Solomon sobre corpos finitos."""

__version__ = "0.1.0"

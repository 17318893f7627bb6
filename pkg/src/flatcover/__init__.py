"""flatcover: genus-3 Teichmuller curves from double covers of genus-2
square-tiled surfaces — orbits, monodromy mod m, exact period arithmetic,
and the classification tables."""

__version__ = "0.1.0"

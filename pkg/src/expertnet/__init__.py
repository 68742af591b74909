"""Expert search over a fused coauthorship/profile social network."""

__version__ = "0.1.0"

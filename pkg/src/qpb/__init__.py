"""Exact symbolic engine for braided first-order calculi on quantum principal bundles."""

__version__ = "0.1.0"

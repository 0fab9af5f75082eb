"""Exact-arithmetic verification of binomial-sum supercongruences and the
finite hypergeometric identities behind them."""

from .suite import VERSION as __version__  # noqa: F401

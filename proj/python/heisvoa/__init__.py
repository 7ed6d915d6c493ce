"""Exact symbolic engine for rank-r free-boson vertex algebras."""

try:
    from ._heisvoa import Algebra, ParseError, colored_partition_count
except ImportError:  # extension built outside the package (plain CMake builds)
    from _heisvoa import Algebra, ParseError, colored_partition_count

__all__ = ["Algebra", "ParseError", "colored_partition_count"]

"""weylbox: exact computation around Littlewood-Richardson and plethysm
coefficients, Ehrhart counting of rational polytopes, symmetric-group
characters and Kronecker coefficients, explicit Weyl-module models, the
permanent/determinant symmetry characterizations, and the strongly explicit
obstruction family. All arithmetic is exact; nothing here uses floats."""

__version__ = "0.1.0"

from .partitions import Partition, Tableau  # noqa: F401

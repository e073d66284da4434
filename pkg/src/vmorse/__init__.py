"""vmorse: exact enumeration of virtual morsifications of real critical
points, with Petrovskii class bookkeeping and local-lacuna queries."""

__version__ = "0.1.0"

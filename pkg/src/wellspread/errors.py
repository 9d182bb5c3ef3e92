"""Exception hierarchy shared across the package.

CLI exit-code mapping: InvalidParams and its input-shaped siblings exit 2,
ResourceCap exits 3, verification failures exit 1.
"""
from __future__ import annotations


class WellspreadError(Exception):
    """Base class for all package errors."""


class InvalidParams(WellspreadError):
    """Parameters outside an operation's documented domain."""


class ResourceCap(WellspreadError):
    """A configured size/effort cap was exceeded before completion."""


class NotWellSpread(WellspreadError):
    """A cyclic subset required to be well-spread is not."""


class NotCoprime(WellspreadError):
    """An operation requiring gcd(n, k) = 1 received gcd > 1."""


class NotAnEdge(WellspreadError):
    """The named vertex pair is not an edge of the graph."""


class NotCycleEdge(WellspreadError):
    """The named edge is not a base-cycle edge, as required."""

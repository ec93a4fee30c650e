"""Exact interval edge-colorings of small graphs and multigraphs."""

from .coloring import IntervalCertificate, Verdict, is_interval, make_certificate, verify_certificate
from .graph import Multigraph
from .kernel import BACKEND

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "IntervalCertificate",
    "Multigraph",
    "Verdict",
    "is_interval",
    "make_certificate",
    "verify_certificate",
]

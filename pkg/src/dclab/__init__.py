"""Exact computations on double-critical graphs."""

from .graph import Graph, build, parse_graph6, parse_spec, write_graph6

__all__ = ["Graph", "build", "parse_graph6", "parse_spec", "write_graph6"]

"""rootline: line-graph recognition for multigraphs with constructive
certificates, built on GF(2) quadratic-space geometry."""

__version__ = "0.1.0"

"""happening: team activity tracking with on-demand summaries."""

__version__ = "0.1.0"

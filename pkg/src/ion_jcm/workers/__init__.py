"""Threaded evaluation over time grids."""
from ion_jcm.workers.grid import GridWorker, grid_chunks, run_on_grid

__all__ = ["GridWorker", "grid_chunks", "run_on_grid"]

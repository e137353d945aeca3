"""BLAS thread-count control.

SECTORLAB_THREADS caps the thread pools of whatever BLAS numpy loads.
The knob must be exported before numpy initialises, so this module is
imported at the very top of the package __init__, ahead of anything that
touches numpy.
"""

import os

_n = os.environ.get("SECTORLAB_THREADS")
if _n:
    for _var in ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS", "MKL_NUM_THREADS"):
        os.environ.setdefault(_var, _n)

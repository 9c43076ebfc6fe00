"""Pick the filter-bank kernel at import time.

The compiled extension is used when it was built; otherwise the numpy
implementation. Set ``PDFMARK_PURE_PYTHON=1`` to force the fallback.
"""

import logging
import os

from . import _pykernels

logger = logging.getLogger(__name__)

NAME = "python"
analysis = _pykernels.analysis
synthesis = _pykernels.synthesis

if not os.environ.get("PDFMARK_PURE_PYTHON"):
    try:
        from . import _ckernels
    except ImportError:
        logger.debug("compiled kernels unavailable, using numpy fallback")
    else:
        NAME = "cython"
        analysis = _ckernels.analysis
        synthesis = _ckernels.synthesis

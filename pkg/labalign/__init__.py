#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# labalign
#

__version__ = "0.1.0"

from .pipeline import LabelAlignment
from .pipeline import AlignmentResult
from .dataio import DomainDataset
from .dataio import PairSet
from .transport import MassVectors
from .transport import uniform_masses
from .synthetic import generate_helix_pair
from .synthetic import generate_blobs_pair
from .errors import ValidationError
from .errors import NumericalError
from .errors import StageError
from .utils import utils
from . import dataio
from . import graph
from . import diffusion
from . import bridge
from . import transport
from . import embedding
from . import analysis
from . import sweep

__all__ = ['LabelAlignment', 'AlignmentResult',
        'DomainDataset', 'PairSet',
        'MassVectors', 'uniform_masses',
        'generate_helix_pair', 'generate_blobs_pair',
        'ValidationError', 'NumericalError', 'StageError',
        'utils', 'dataio', 'graph', 'diffusion', 'bridge',
        'transport', 'embedding', 'analysis', 'sweep',
]

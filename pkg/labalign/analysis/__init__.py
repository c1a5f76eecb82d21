#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# labalign analysis
#

from .evaluation import MetricReport
from .evaluation import foscttm, label_transfer, evaluate

__all__ = ['MetricReport', 'foscttm', 'label_transfer', 'evaluate']

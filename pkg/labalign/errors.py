#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# labalign errors
#


class ValidationError(ValueError):
    """bad parameters or malformed input, detected before computing"""
    exit_code = 1


class NumericalError(RuntimeError):
    """a computed quantity violates the invariant it must satisfy"""
    exit_code = 2


class StageError(RuntimeError):
    """error raised inside a pipeline stage, tagged with the stage name"""

    def __init__(self, stage, error):
        self.stage = stage
        self.error = error
        self.exit_code = getattr(error, "exit_code", 1 if isinstance(error, ValueError) else 2)
        msg = "stage '%s' failed: %s" % (stage, error)
        super().__init__(msg)

#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# labalign {generate,align,eval,sweep} ...
#

import sys

from labalign.cli import la_generate, la_align, la_eval, la_sweep

COMMANDS = {
    "generate": la_generate.main,
    "align": la_align.main,
    "eval": la_eval.main,
    "sweep": la_sweep.main,
}


def main(argv=None):
    if argv is None:
        argv = sys.argv[1:]
    if len(argv) == 0 or argv[0] in ("-h", "--help") or argv[0] not in COMMANDS:
        print("usage: labalign {%s} [options]" % ",".join(COMMANDS), file=sys.stderr)
        if len(argv) and argv[0] not in ("-h", "--help"):
            print("labalign: error: unknown command '%s'" % argv[0], file=sys.stderr)
            return 1
        return 0 if len(argv) else 1
    return COMMANDS[argv[0]](argv[1:])


if __name__ == "__main__":
    sys.exit(main())

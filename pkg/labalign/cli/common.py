#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# labalign command line helpers
#

import argparse
import json
import pathlib
import sys

from labalign import LabelAlignment
from labalign.errors import ValidationError, NumericalError, StageError


class TalkativeParser(argparse.ArgumentParser):
    def error(self, message):
        """overload to print_help for every error, exit with the validation code"""
        self.print_help(sys.stderr)
        print('\n%s: error: %s' % (self.prog, message), file=sys.stderr)
        sys.exit(ValidationError.exit_code)


def parse_config_file(argv):
    """Split off -c/--config_file and layer it over the LabelAlignment defaults

    Returns:
        dict: configuration, defaults updated with the JSON file
        list: remaining command line arguments
    """
    conf_parser = argparse.ArgumentParser(add_help=False)
    conf_parser.add_argument('-c', '--config_file',
            help='configure LabelAlignment from JSON file. Overriden by command line args.')
    confargs, remaining_argv = conf_parser.parse_known_args(argv)

    config = LabelAlignment.get_defaults_dict()
    if confargs.config_file is not None:
        with open(confargs.config_file) as f:
            c = json.load(f)
        if not isinstance(c, dict):
            raise ValidationError("%s: config file must hold a JSON object" % confargs.config_file)
        config.update(c)
    return config, remaining_argv


def add_alignment_arguments(parser):
    config_group = parser.add_argument_group("Alignment")
    config_group.add_argument('-c', '--config_file',
            help='configure LabelAlignment from JSON file. Overriden by command line args.') # parsed by parse_config_file, here for help msg
    config_group.add_argument("--alpha", dest="alpha", type=float, help="decay exponent of the alpha-decay kernel")
    config_group.add_argument("--knn", dest="knn", type=int, help="neighbor rank of the adaptive bandwidth")
    config_group.add_argument("--epsilon", dest="epsilon", type=float,
                        help="entropic regularization, 0 selects exact assignment")
    config_group.add_argument("--mu", dest="mu", type=float, help="weight of within-domain affinities in the joint graph")
    config_group.add_argument("--dim", dest="dim", type=int, help="dimension of the shared embedding")
    config_group.add_argument("--offdiag", dest="offdiag_mode", choices=("wxy", "t"),
                        help="off-diagonal block of the joint graph: Wx T + T Wy (wxy) or the coupling (t)")
    config_group.add_argument("--coupling", dest="coupling_method", choices=("ot", "knn"),
                        help="optimal transport or nearest-neighbor matching on the cross cost")
    config_group.add_argument("--knn-coupling-k", dest="knn_coupling_k", type=int,
                        help="targets per source row for --coupling knn")
    config_group.add_argument("--tol", dest="tol", type=float, help="sinkhorn marginal tolerance")
    config_group.add_argument("--max-iter", dest="max_iter", type=int, help="sinkhorn iteration cap")
    return config_group


def config_from_args(config, args):
    # command line arguments override config
    for key in config:
        if key in args.__dict__ and args.__dict__[key] is not None:
            config[key] = args.__dict__[key]
    return config


def parse_ks(text):
    try:
        ks = [int(k) for k in text.split(",") if k.strip() != ""]
    except ValueError:
        raise ValidationError("--ks must be a comma separated list of integers, got '%s'" % text)
    if len(ks) == 0 or min(ks) < 1:
        raise ValidationError("--ks needs integers >= 1, got '%s'" % text)
    return ks


def ensure_parent(path):
    parent = pathlib.Path(path).parent
    parent.mkdir(parents=True, exist_ok=True)


def report_error(error):
    """print an error on stderr and return its exit code"""
    if isinstance(error, StageError):
        print("Error in stage '%s': %s" % (error.stage, error.error), file=sys.stderr)
        return error.exit_code
    if isinstance(error, NumericalError):
        print("Numerical error: %s" % error, file=sys.stderr)
        return NumericalError.exit_code
    print("Error: %s" % error, file=sys.stderr)
    return ValidationError.exit_code


def print_files_written(written_files_log):
    if len(written_files_log["filename"]) == 0:
        return
    print("Files written:")
    longest_fn = max([len(fn) for fn in written_files_log["filename"]])
    line = "%%%ds <-- " % longest_fn + "%s"
    for fn, desc in zip(written_files_log["filename"], written_files_log["description"]):
        print(line % (fn, desc))

#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# hyperparameter sweep, one row of scores per configuration
#

import sys

from labalign import dataio
from labalign.errors import ValidationError
from labalign.sweep import sweep_grid, run_sweep, summarize_sweep, STATUS_FAILED
from labalign.cli.common import TalkativeParser, parse_config_file, parse_ks, ensure_parent
from labalign.cli.common import report_error, print_files_written


def parse_values(text, cast, name):
    """comma separated values; integer axes also take inclusive ranges like 2:20"""
    values = []
    for token in text.split(","):
        token = token.strip()
        if token == "":
            continue
        try:
            if cast is int and ":" in token:
                start, stop = token.split(":")
                values.extend(range(int(start), int(stop) + 1))
            else:
                values.append(cast(token))
        except ValueError:
            raise ValidationError("--%s: cannot parse '%s'" % (name, token))
    if len(values) == 0:
        raise ValidationError("--%s: no values in '%s'" % (name, text))
    return values


def cmd_lineparser(argv=None):
    config, remaining_argv = parse_config_file(argv)

    parser = TalkativeParser(prog="la_sweep.py", description="sweep alignment hyperparameters")
    io_group = parser.add_argument_group("Input/Output")
    io_group.add_argument("--source", dest="source", required=True, help="source domain CSV")
    io_group.add_argument("--target", dest="target", required=True, help="target domain CSV with the true labels")
    io_group.add_argument("--pairs", dest="pairs", help="ground-truth pairs CSV, enables FOSCTTM")
    io_group.add_argument("--label-column", dest="label_column", help="name of the label column (default: 'label')")
    io_group.add_argument("-o", "--out-table", dest="out_table", required=True, help="one row per cell (CSV)")
    io_group.add_argument("--out-summary", dest="out_summary", help="scores averaged over seeds (CSV)")

    grid_group = parser.add_argument_group("Grid (comma separated values, integer ranges as a:b)")
    grid_group.add_argument('-c', '--config_file',
            help='settings shared by all cells (JSON); single values of swept parameters are used when not swept')
    grid_group.add_argument("--alpha", dest="alpha")
    grid_group.add_argument("--knn", dest="knn")
    grid_group.add_argument("--epsilon", dest="epsilon")
    grid_group.add_argument("--mu", dest="mu")
    grid_group.add_argument("--dim", dest="dim")
    grid_group.add_argument("--offdiag", dest="offdiag_mode", help="wxy, t or wxy,t")
    grid_group.add_argument("--target-label-fraction", dest="target_label_fraction", default="1.0")
    grid_group.add_argument("--seeds", "--seed", dest="seeds", default="0", help="seeds of the target label masking")

    run_group = parser.add_argument_group("Run")
    run_group.add_argument("--projection", dest="projection", default="spectral",
                        choices=("spectral", "barycentric", "both"))
    run_group.add_argument("--ks", dest="ks", default="1,10")
    run_group.add_argument("-j", "--jobs", dest="jobs", type=int, default=1, help="worker processes (default: 1)")
    args = parser.parse_args(remaining_argv)
    return args, config


def build_grid(args, config):
    axes = {}
    for name, cast in (("alpha", float), ("knn", int), ("epsilon", float), ("mu", float),
                       ("dim", int), ("offdiag_mode", str)):
        text = getattr(args, name)
        if text is None:
            axes[name] = [config[name]]
        else:
            axes[name] = parse_values(text, cast, name)
    axes["target_label_fraction"] = parse_values(args.target_label_fraction, float, "target-label-fraction")
    axes["seed"] = parse_values(args.seeds, int, "seeds")
    base_config = {k: v for k, v in config.items() if k not in axes}
    return sweep_grid(**axes), base_config


def run(args, config):
    cells, base_config = build_grid(args, config)
    ks = parse_ks(args.ks)
    source = dataio.load_domain_csv(args.source, args.label_column, name="source")
    target = dataio.load_domain_csv(args.target, args.label_column, name="target")
    pairs = None
    if args.pairs is not None:
        pairs = dataio.load_pairs_csv(args.pairs)
        pairs.validate(source.n_samples, target.n_samples)

    table = run_sweep(source, target, pairs, cells, base_config, args.projection, ks, args.jobs)

    written_files_log = {"filename": [], "description": []}
    ensure_parent(args.out_table)
    table.to_csv(args.out_table, index=False, float_format=dataio.FLOAT_FORMAT)
    n_failed = int((table["status"] == STATUS_FAILED).sum())
    written_files_log["filename"].append(args.out_table)
    written_files_log["description"].append("%d cells, %d failed" % (len(table), n_failed))
    if args.out_summary is not None:
        summary = summarize_sweep(table)
        ensure_parent(args.out_summary)
        summary.to_csv(args.out_summary, index=False, float_format=dataio.FLOAT_FORMAT)
        written_files_log["filename"].append(args.out_summary)
        written_files_log["description"].append("%d configurations averaged over seeds" % len(summary))
    for _, row in table[table["status"] == STATUS_FAILED].iterrows():
        print("WARNING: cell %s failed: %s" % (
            ", ".join("%s=%s" % (k, row[k]) for k in ("alpha", "knn", "epsilon", "mu", "dim")), row["error"]),
            file=sys.stderr)
    return written_files_log


def main(argv=None):
    try:
        args, config = cmd_lineparser(argv)
        written_files_log = run(args, config)
    except (ValueError, RuntimeError, OSError) as error:
        return report_error(error)
    print_files_written(written_files_log)
    return 0


if __name__ == "__main__":
    sys.exit(main())

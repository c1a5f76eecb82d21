#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# score aligned coordinates with FOSCTTM and k-NN label transfer
#

import sys

from labalign import dataio
from labalign.analysis import evaluate
from labalign.errors import ValidationError
from labalign.cli.common import TalkativeParser, parse_ks, ensure_parent, report_error, print_files_written

METRICS = ("foscttm", "label_transfer")


def cmd_lineparser(argv=None):
    parser = TalkativeParser(prog="la_eval.py", description="score an embedding or projection file")
    parser.add_argument("--embedding", dest="embedding", required=True,
                        help="coordinates written by la_align.py --out-embedding or --out-projection")
    parser.add_argument("--pairs", dest="pairs", help="ground-truth pairs CSV (source,target)")
    parser.add_argument("--source-labels", dest="source_labels",
                        help="CSV with the source labels (a domain file or a single label column)")
    parser.add_argument("--target-labels", dest="target_labels",
                        help="CSV with the true target labels")
    parser.add_argument("--label-column", dest="label_column", help="name of the label column (default: 'label')")
    parser.add_argument("--metrics", dest="metrics", default="foscttm,label_transfer",
                        help="comma separated subset of %s (default: all)" % ",".join(METRICS))
    parser.add_argument("--ks", dest="ks", default="1,10",
                        help="comma separated neighbor counts for label transfer (default: 1,10)")
    parser.add_argument("--space", dest="space", default="spectral", choices=("spectral", "ambient"),
                        help="tag of the coordinate space in the report (default: spectral)")
    parser.add_argument("-o", "--out-metrics", dest="out_metrics", help="metrics JSON, printed to stdout if omitted")
    return parser.parse_args(argv)


def run(args):
    requested = [m.strip() for m in args.metrics.split(",") if m.strip() != ""]
    unknown = [m for m in requested if m not in METRICS]
    if len(unknown) or len(requested) == 0:
        raise ValidationError("--metrics must be a subset of %s, got '%s'" % (",".join(METRICS), args.metrics))
    ks = parse_ks(args.ks)

    source_coords, target_coords = dataio.read_coordinates_csv(args.embedding)
    pairs = None
    if "foscttm" in requested:
        if args.pairs is None:
            raise ValidationError("FOSCTTM requires a pair file, pass --pairs or drop foscttm from --metrics")
        pairs = dataio.load_pairs_csv(args.pairs)
    source_labels = None
    target_labels = None
    if "label_transfer" in requested:
        if args.source_labels is None or args.target_labels is None:
            raise ValidationError("label transfer requires --source-labels and --target-labels")
        source_labels = dataio.load_labels_csv(args.source_labels, args.label_column)
        target_labels = dataio.load_labels_csv(args.target_labels, args.label_column)
        for labels, coords, side in ((source_labels, source_coords, "source"), (target_labels, target_coords, "target")):
            if labels.size != coords.shape[0]:
                raise ValidationError("%d %s labels for %d %s rows in %s" % (
                    labels.size, side, coords.shape[0], side, args.embedding))

    report = evaluate(source_coords, target_coords, pairs, source_labels, target_labels, ks, args.space)

    written_files_log = {"filename": [], "description": []}
    if args.out_metrics is None:
        for key, value in sorted(report.to_dict().items()):
            print("%s: %s" % (key, value))
    else:
        ensure_parent(args.out_metrics)
        dataio.write_metrics(report, args.out_metrics)
        written_files_log["filename"].append(args.out_metrics)
        written_files_log["description"].append("alignment scores (%s)" % args.space)
    return written_files_log


def main(argv=None):
    try:
        args = cmd_lineparser(argv)
        written_files_log = run(args)
    except (ValueError, RuntimeError, OSError) as error:
        return report_error(error)
    print_files_written(written_files_log)
    return 0


if __name__ == "__main__":
    sys.exit(main())

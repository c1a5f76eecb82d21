#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# align two labeled domains and write the coupling, embedding and scores
#

import json
import sys

import labalign
from labalign import LabelAlignment
from labalign import dataio
from labalign.utils.utils import file_digest
from labalign.cli.common import TalkativeParser, parse_config_file, add_alignment_arguments
from labalign.cli.common import config_from_args, parse_ks, ensure_parent, report_error, print_files_written


def cmd_lineparser(argv=None):
    config, remaining_argv = parse_config_file(argv)

    parser = TalkativeParser(prog="la_align.py", description="label-guided alignment of two domains")
    parser.set_defaults(**config)
    parser.add_argument("-v", "--verbose", dest="verbose",
                        action="store_true", help="print stage timings and coupling details")

    io_group = parser.add_argument_group("Input/Output")
    io_group.add_argument("--source", dest="source", required=True,
                        help="source domain CSV: numeric feature columns and a 'label' column")
    io_group.add_argument("--target", dest="target", required=True,
                        help="target domain CSV, unlabeled rows have an empty label")
    io_group.add_argument("--pairs", dest="pairs",
                        help="ground-truth pairs CSV (source,target), used for FOSCTTM only")
    io_group.add_argument("--label-column", dest="label_column",
                        help="name of the label column (default: 'label' when present)")
    io_group.add_argument("--out-coupling", dest="out_coupling", help="coupling as i,j,value triplets")
    io_group.add_argument("--out-embedding", dest="out_embedding", help="shared spectral embedding")
    io_group.add_argument("--out-projection", dest="out_projection",
                        help="source rows projected into the target space, with the target rows")
    io_group.add_argument("--out-metrics", dest="out_metrics", help="FOSCTTM and label transfer (JSON)")
    io_group.add_argument("--out-joint-distance", dest="out_joint_distance",
                        help="dense 1 - W of the joint graph, for external visualization")
    io_group.add_argument("--out-log", dest="out_log",
                        help="run log (JSON): hyperparameters, input digests, stage timings")

    add_alignment_arguments(parser)

    run_group = parser.add_argument_group("Run")
    run_group.add_argument("--projection", dest="projection", default="spectral",
                        choices=("spectral", "barycentric", "both"),
                        help="space(s) in which the alignment is scored (default: spectral)")
    run_group.add_argument("--target-label-fraction", dest="target_label_fraction", type=float, default=1.0,
                        help="keep the labels of this fraction of the labeled target rows (default: 1)")
    run_group.add_argument("--seed", dest="seed", type=int, default=0,
                        help="seed of the target label masking (default: 0)")
    run_group.add_argument("--ks", dest="ks", default="1,10",
                        help="comma separated neighbor counts for label transfer (default: 1,10)")

    args = parser.parse_args(remaining_argv)
    config = config_from_args(config, args)
    return args, config


def run(args, config):
    aligner = LabelAlignment.from_config(config)
    ks = parse_ks(args.ks)

    source = dataio.load_domain_csv(args.source, args.label_column, name="source")
    target = dataio.load_domain_csv(args.target, args.label_column, name="target")
    pairs = None
    if args.pairs is not None:
        pairs = dataio.load_pairs_csv(args.pairs)
        pairs.validate(source.n_samples, target.n_samples)

    aligned_target = target
    if args.target_label_fraction < 1.0:
        aligned_target = target.mask_labels(args.target_label_fraction, args.seed)

    need_embedding = args.projection != "barycentric" or args.out_embedding is not None
    need_projection = args.projection != "spectral" or args.out_projection is not None

    result = aligner.align(source, aligned_target, embed=need_embedding)
    projected = None
    if need_projection:
        projected = aligner.project(result, source, aligned_target)
    metrics = None
    if args.out_metrics is not None or args.verbose:
        metrics = aligner.score(result, source, aligned_target, pairs, target.labels,
                                args.projection, ks, projected)

    written_files_log = {"filename": [], "description": []}
    outputs = (
        (args.out_coupling, lambda fn: dataio.write_coupling(result.coupling, fn),
            "coupling (%s), %d x %d" % (result.coupling.method, *result.coupling.shape)),
        (args.out_embedding, lambda fn: dataio.write_embedding(result.embedding, fn),
            "shared embedding, dim %d" % aligner.dim),
        (args.out_projection, lambda fn: dataio.write_projection(projected, target.features, fn),
            "barycentric projection into the target space"),
        (args.out_metrics, lambda fn: dataio.write_metrics(metrics, fn),
            "alignment scores (%s)" % args.projection),
        (args.out_joint_distance, lambda fn: dataio.export_joint_distance(result.joint, fn),
            "joint graph distance 1 - W, %d x %d" % result.joint.values.shape),
    )
    for fn, write, description in outputs:
        if fn is None:
            continue
        ensure_parent(fn)
        write(fn)
        written_files_log["filename"].append(fn)
        written_files_log["description"].append(description)

    if args.out_log is not None:
        inputs = {"source": args.source, "target": args.target}
        if args.pairs is not None:
            inputs["pairs"] = args.pairs
        run_log = {
            "version": labalign.__version__,
            "hyperparameters": aligner.to_dict(),
            "run": {
                "projection": args.projection,
                "target_label_fraction": args.target_label_fraction,
                "seed": args.seed,
                "ks": ks,
            },
            "inputs": {key: {"path": fn, "sha256": file_digest(fn)} for key, fn in inputs.items()},
            "classes": list(result.classes),
            "coupling": result.coupling.summary(),
            "coupling_error_history": result.coupling.error_history,
            "stage_timings": result.timings,
            "metrics": metrics,
            "files_written": list(written_files_log["filename"]),
        }
        ensure_parent(args.out_log)
        with open(args.out_log, "w") as f:
            json.dump(run_log, f, indent=2, sort_keys=True)
            f.write("\n")
        written_files_log["filename"].append(args.out_log)
        written_files_log["description"].append("run log")

    if args.verbose:
        print("shared classes: %s" % ", ".join(result.classes), file=sys.stderr)
        for stage, seconds in result.timings.items():
            print("%12s %9.3f s" % (stage, seconds), file=sys.stderr)
        summary = result.coupling.summary()
        print("coupling: " + ", ".join("%s=%s" % (k, v) for k, v in summary.items()), file=sys.stderr)
        for key, value in sorted(metrics.items()):
            print("%s: %s" % (key, value), file=sys.stderr)

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

#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# write a synthetic pair of domains with their ground-truth pairing
#

import sys

from labalign import generate_helix_pair, generate_blobs_pair
from labalign.dataio import write_domain_csv, write_pairs_csv
from labalign.cli.common import TalkativeParser, ensure_parent, print_files_written, report_error


def cmd_lineparser(argv=None):
    parser = TalkativeParser(prog="la_generate.py", description="write a synthetic source/target pair")
    parser.add_argument("kind", choices=("helix", "blobs"),
                        help="helix: 3D helix vs straight line; blobs: one Gaussian blob per class in each domain")
    parser.add_argument("--n", dest="n", type=int, help="samples per domain (default: 300 helix, 40 blobs)")
    parser.add_argument("--classes", dest="classes", type=int, help="number of classes (default: 5 helix, 3 blobs)")
    parser.add_argument("--seed", dest="seed", type=int, default=0, help="random seed (default: 0)")
    parser.add_argument("-o", "--out", dest="out_prefix",
                        help="prefix of the output files, suffixed _source.csv, _target.csv, _pairs.csv (default: kind)")

    helix_group = parser.add_argument_group("helix")
    helix_group.add_argument("--noise", dest="noise", type=float, default=0.05,
                        help="standard deviation of the Gaussian noise (default: 0.05)")

    blobs_group = parser.add_argument_group("blobs")
    blobs_group.add_argument("--dims-source", dest="dims_source", type=int, default=3)
    blobs_group.add_argument("--dims-target", dest="dims_target", type=int, default=5)
    blobs_group.add_argument("--separation", dest="separation", type=float, default=1.5,
                        help="distance of the class centers from the origin, in units of the noise; "
                             "values well above 3 leave one neighbor-graph component per class, "
                             "which la_align rejects (default: 1.5)")
    args = parser.parse_args(argv)

    if args.out_prefix is None:
        args.out_prefix = args.kind
    return args


def main(argv=None):
    args = cmd_lineparser(argv)
    try:
        if args.kind == "helix":
            source, target, pairs = generate_helix_pair(
                n=300 if args.n is None else args.n,
                classes=5 if args.classes is None else args.classes,
                noise=args.noise,
                seed=args.seed)
        else:
            source, target, pairs = generate_blobs_pair(
                n=40 if args.n is None else args.n,
                classes=3 if args.classes is None else args.classes,
                dims_source=args.dims_source,
                dims_target=args.dims_target,
                separation=args.separation,
                seed=args.seed)

        written_files_log = {"filename": [], "description": []}
        ensure_parent(args.out_prefix + "_source.csv")
        for dataset in (source, target):
            fn = "%s_%s.csv" % (args.out_prefix, dataset.name)
            write_domain_csv(dataset, fn)
            written_files_log["filename"].append(fn)
            written_files_log["description"].append("%s domain, %d rows x %d features, labeled" % (
                dataset.name, dataset.n_samples, dataset.n_features))
        fn = "%s_pairs.csv" % args.out_prefix
        write_pairs_csv(pairs, fn)
        written_files_log["filename"].append(fn)
        written_files_log["description"].append("ground-truth pairs (source, target)")
    except (ValueError, RuntimeError, OSError) as error:
        return report_error(error)

    print_files_written(written_files_log)
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Convert the KnotInfo CSV export into per-crossing-number corpus files.

Usage: python3 knotinfo_to_corpus.py knotinfo_data_complete.csv OUTDIR [MAX_CROSSINGS]

Each output line has the form `NAME c=C alt=0|1 : X[a,b,c,d] ...`.
"""
import csv
import json
import os
import sys


def main():
    src, out = sys.argv[1], sys.argv[2]
    max_c = int(sys.argv[3]) if len(sys.argv) > 3 else 12
    csv.field_size_limit(10**9)
    rows = list(csv.DictReader(open(src), delimiter="|"))[1:]
    by_c = {}
    for row in rows:
        c = int(row["crossing_number"])
        if c < 3 or c > max_c:
            continue
        pd = json.loads(row["pd_notation"])
        alt = 1 if row["alternating"] == "Y" else 0
        body = " ".join("X[%d,%d,%d,%d]" % tuple(t) for t in pd)
        by_c.setdefault(c, []).append("%s c=%d alt=%d : %s" % (row["name"], c, alt, body))
    os.makedirs(out, exist_ok=True)
    for c, lines in sorted(by_c.items()):
        with open(os.path.join(out, "c%02d.pd" % c), "w") as f:
            f.write("# prime knots with crossing number %d (KnotInfo PD notation)\n" % c)
            f.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()

"""Export reference Jones / Kauffman coefficient vectors from the KnotInfo CSV.

Usage: python3 knotinfo_reference.py knotinfo_data_complete.csv OUT.tsv

Columns: name, jones vector (`min max c0 c1 ...` in powers of t),
kauffman vector (`;`-separated z-rows `z amin c0 c1 ...`, only for c <= 10).
"""
import csv
import json
import sys


def main():
    src, out = sys.argv[1], sys.argv[2]
    csv.field_size_limit(10**9)
    rows = list(csv.DictReader(open(src), delimiter="|"))[1:]
    with open(out, "w") as f:
        f.write("# name\tjones\tkauffman\n")
        for row in rows:
            c = int(row["crossing_number"])
            if c < 3 or c > 12:
                continue
            j = json.loads(row["jones_polynomial_vector"])
            jones = " ".join(str(x) for x in j)
            kauff = ""
            if c <= 10:
                k = json.loads(row["kauffman_polynomial_vector"])
                zmin = k[0]
                parts = []
                for i, zr in enumerate(k[2:]):
                    parts.append(" ".join(str(x) for x in [zmin + i, zr[0]] + zr[2:]))
                kauff = ";".join(parts)
            f.write("%s\t%s\t%s\n" % (row["name"], jones, kauff))


if __name__ == "__main__":
    main()

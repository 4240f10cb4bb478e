"""Print the averages of every statistic for a range of sizes, next to their limits."""

import argparse

from elenas.genfunc import asymptotics_report


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", default="10,50,100,200,500,1000")
    args = ap.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]
    reports = {n: {r.statistic: r for r in asymptotics_report(n)} for n in sizes}
    stats = list(reports[sizes[0]])
    print("statistic".ljust(16) + "".join(f"n={n}".rjust(14) for n in sizes) + "limit".rjust(16))
    for s in stats:
        row = "".join(f"{reports[n][s].deviation:14.3e}" for n in sizes)
        print(s.ljust(16) + row + f"{float(reports[sizes[0]][s].constant):16.10f}")


if __name__ == "__main__":
    main()

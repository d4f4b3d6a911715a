# Plot the result tables written by the ifcavity command line interface

import csv
import os
import sys

import matplotlib.pyplot as plt


def read_table(path):
    with open(path, "rt", newline="") as input_file:
        return list(csv.DictReader(input_file))


def column(rows, name, **where):
    return [
        float(row[name]) for row in rows if all(row[key] == value for key, value in where.items())
    ]


# Tables of "ifcavity sweep-xi" and "ifcavity security-curve" in the given directory
path_in = sys.argv[1] if len(sys.argv) > 1 else "."
sweep = read_table(os.path.join(path_in, "sweep-xi.csv"))
curves = read_table(os.path.join(path_in, "security-curve.csv"))

fig, (ax_sweep, ax_curve) = plt.subplots(1, 2, figsize=(10, 4))

# Security and SNRs over the coupling efficiency, one line per photon number
for n0 in sorted({row["n0"] for row in sweep}, key=float):
    xi = column(sweep, "xi", n0=n0)
    ax_sweep.plot(xi, column(sweep, "eta_tot", n0=n0), label="eta_tot, N0 = {}".format(n0))
    ax_sweep.plot(xi, column(sweep, "snr1", n0=n0), "--", label="SNR1, N0 = {}".format(n0))
    ax_sweep.plot(xi, column(sweep, "snr2", n0=n0), ":", label="SNR2, N0 = {}".format(n0))
ax_sweep.set_xlabel("coupling efficiency xi")
ax_sweep.legend()

# Total security over the SNR at the conditional optima
for port in ("reflection", "transmission"):
    ax_curve.plot(
        column(curves, "snr", port=port), column(curves, "eta_tot", port=port), label=port
    )
ax_curve.set_xlabel("SNR")
ax_curve.set_ylabel("total security")
ax_curve.legend()

fig.tight_layout()
fig.savefig(os.path.join(path_in, "ifcavity.png"), dpi=150)

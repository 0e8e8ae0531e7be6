# %% [markdown]
# # Surfaces isogenous to a product with K^2 = 8
#
# With no singular points the group acts freely, the basket is empty and the
# sweep reduces to signature pairs with |G| = (g1 - 1)(g2 - 1).  The run
# below lists all of them with their homology.

# %%
import time

from prodquot.pipeline import RunConfig, classify, emit_report

t0 = time.perf_counter()
report = classify(RunConfig(k2=8))
print(f"{len(report.accepted)} surfaces in {time.perf_counter() - t0:.1f}s")

# %%
print(emit_report(report, "csv").decode())

# %% [markdown]
# Cases the sweep could not decide are kept with a reason.

# %%
reasons = {}
for s in report.skipped:
    reasons[s.reason] = reasons.get(s.reason, 0) + 1
print(reasons)

# %%
for stage, t in report.timings.items():
    print(f"{stage:14s} {t['seconds']:7.2f}s {t['peak_mb']:7.1f} MB")

"""Checking the laws across every small poset at once.

check_poset runs a battery of cross-checks on one poset: the
representation over the full dual, the closure equations, the
fullness lemma, orthocomplement representations where they exist, the
distributivity and Boolean equivalences where the poset is a lattice.
sweep_catalog drives it over every isomorphism class up to a size.

The same battery is what `biclosure check` and `biclosure catalog`
print as JSON, so this script is also a tour of what those reports
contain.

Run it:

    python3 demos/05_catalog_sweep.py
"""

from collections import Counter

from biclosure import boolean_algebra, check_poset, sweep_catalog

# ---------------------------------------------------------------------------
# One poset first. Every check carries a name, a one-line statement of
# what it certifies, and a pass flag (plus a witness when it fails).

report = check_poset(boolean_algebra(2), suite="all")
print("checks on the four-element Boolean lattice:")
for check in report.checks:
    print(f"  [{'ok' if check.passed else 'FAIL'}] {check.name}")
print("suite verdict:", report.all_passed)

# Suites narrow the battery when only one theme is of interest.
general = check_poset(boolean_algebra(2), suite="general")
print(f"\nthe general suite alone runs {len(general.checks)} checks")

# ---------------------------------------------------------------------------
# Now every isomorphism class with up to five elements: 87 posets, a
# few hundred checks, a couple of seconds.

reports = sweep_catalog(5)
print(f"\nswept {len(reports)} classes:",
      "all passed" if all(r.all_passed for r in reports) else "FAILURES")

tally = Counter(c.name for r in reports for c in r.checks)
print("checks by name:")
for name, count in sorted(tally.items()):
    print(f"  {count:4d}  {name}")

# ---------------------------------------------------------------------------
# The command line gives the same reports as JSON documents:
#
#   biclosure check '{"elements": ["0", "a", "b", "1"], "le": [["0", "a"],
#       ["0", "b"], ["a", "1"], ["b", "1"]]}'
#   biclosure catalog --max-n 5
#   biclosure catalog --max-n 6 --suite boolean --out boolean.json
#
# Exit codes distinguish a failed check (1) from bad input (2) and a
# deliberately exceeded size bound (3).
print("\nsee `biclosure --help` for the matching command line verbs")

"""Configuration templates for knotfloer."""

CONFIG_TEMPLATE = """\
# config.yaml - OPTIONAL - knotfloer runs with the defaults below when this file is absent.
# Ensure this is valid YAML.
# enable_debug: Set to true for verbose debugging output on standard error.
# upsilon.denominator_bound: Largest denominator q of the grid t = p/q used to rebuild
#   Upsilon as a PL function. null means 2 * (1 + max |a - b|) over the edges.
# upsilon.allow_non_knot: When true, complexes whose t-modified homology has free rank
#   other than 1 yield the maximal grading with a warning instead of an error.
# upsilon.workers: Threads used to evaluate the grid points in parallel.
# output.csv_step: Default sampling step for --csv output, as p/q.
# verify.random_seed: Seed for the randomized identity suites.
# verify.random_trials: Number of random cases per randomized suite.

enable_debug: false

upsilon:
  denominator_bound: null
  allow_non_knot: false
  workers: 1

output:
  csv_step: "1/10"

verify:
  random_seed: 0
  random_trials: 200
"""

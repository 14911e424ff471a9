from django.db import models


class Verdict(models.TextChoices):
    HOLDS = 'holds', 'Holds'
    EQUALITY = 'equality', 'Equality'
    VIOLATED = 'violated', 'Violated'
    PROBE = 'probe', 'Probe'
    COUNTEREXAMPLE_CONFIRMED = 'counterexample-confirmed', 'Counterexample confirmed'
    NOT_APPLICABLE = 'not-applicable', 'Not applicable'


class Suite(models.TextChoices):
    """Verification suites; values are the names accepted on the command line."""

    VOLUME_LOWER = 'thm11', 'Volume lower bound on g_i'
    SPECIALIZED_LOWER = 'corollary12', 'Specialized lower bounds on g_1, g_2, g_(d-2)'
    UPPER = 'bm-upper', 'Upper bound on g_i'
    HIBI = 'hibi', 'Hibi lower bound a_i >= a_1'
    STANLEY_SYMMETRIC = 'stanley-sym', 'Lattice surface of symmetric polytopes'
    TREUTLEIN = 'treutlein', 'Degree-2 h*-vector inequalities'
    SURFACE_MINIMUM = 'prop110', 'Euclidean surface minimum'
    ISO_CROSS = 'iso-cross', 'Isoperimetric ratio of cross-polytopes'
    SURFACE_TRIVIAL = 'eq15', 'Trivial lattice surface bound'
    SERIES = 'series', 'h*-transforms against brute force'
    PAIR_PROBE = 'pair-probe', 'Symmetric a_i + a_(d-i) probe'

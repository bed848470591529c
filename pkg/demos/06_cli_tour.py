"""A tour of the command line front end.

The installed entry point is `qwebs`; here we drive the same dispatcher
in-process. Scalar parameters are key=value tokens, webs are one-line
ladder texts, and every report is byte-deterministic.
"""

from qwebs.cli import run

W_TOP = "N=2 m=2 base=[2,0] rungs=[]"
F = "N=2 m=2 base=[2,0] rungs=[F1^1]"


def demo(argv):
    print(f"$ qwebs {' '.join(repr(a) if ' ' in a else a for a in argv)}")
    code = run(argv)
    print(f"(exit {code})\n")


# Enumerate a weight set.
demo(["enumerate", "m=2", "d=2", "N=2"])

# Build a ladder from a divided-power sequence; the rightmost factor acts
# first. An annihilated weight reports ZERO.
demo(["ladder", "N=2", "m=2", "d=2", "lambda=[0]", "seq=F1^1"])
demo(["ladder", "N=2", "m=2", "d=2", "lambda=[2]", "seq=E1^1"])

# Closed evaluation and the web form.
demo(["eval", "N=2 m=2 base=[2,0] rungs=[F1^1, E1^1]"])
demo(["form", W_TOP, W_TOP])

# A Gram matrix over ladders generated at a weight.
demo(["gram", "N=2", "m=2", "d=2", "lambda=[2]", "seqs=F1^1; F1^1*E1^1*F1^1"])

# Relation sweep: exit code 2 would flag FAIL lines.
demo(["verify-relations", "N=2", "rules=digon"])

# Factorizations: dump one, then a graded EXT dimension, also as JSON.
demo(["compile-mf", F])
demo(["ext-dim", F, F])
demo(["ext-dim", "--json", F, F])

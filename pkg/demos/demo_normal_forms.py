"""Normal forms in graph products: a guided tour.

Run with:  python3 demos/demo_normal_forms.py
"""

from qlattice import CommutationGraph

# ---------------------------------------------------------------------------
# A path of three integer vertices: a - b - c.  Adjacent vertices commute,
# so a and b commute, b and c commute, but a and c do not.
# ---------------------------------------------------------------------------
path3 = CommutationGraph(
    [("a", "Z"), ("b", "Z"), ("c", "Z")], [("a", "b"), ("b", "c")]
)

print("== shuffling commuting syllables ==")
word = [("b", 1), ("a", 1)]
print("input  :", word)
print("normal :", path3.normal(word).syllables)
print()

print("== amalgamation through a commuting middle syllable ==")
word = [("a", 1), ("b", 2), ("a", -1)]
print("input  :", word)
print("normal :", path3.normal(word).syllables)
print("(the two a-syllables met through b and cancelled)")
print()

print("== blocked amalgamation ==")
word = [("a", 1), ("c", 2), ("a", -1)]
x = path3.normal(word)
print("input  :", word)
print("normal :", x.syllables)
print("c does not commute with a, so the word is already reduced;")
print("syllable length:", len(x))
print()

# ---------------------------------------------------------------------------
# Mixing in a braid factor.  The vertex v carries the braid monoid B3 with
# generators s, t and relation sts = tst; the integer vertex a commutes
# with everything at v.
# ---------------------------------------------------------------------------
B3 = {"artin": {"generators": ["s", "t"], "m": [[1, 3], [3, 1]]}}
mixed = CommutationGraph([("a", "Z"), ("v", B3)], [("a", "v")])
ops = mixed.ops["v"]

print("== braid syllables merge inside their vertex ==")
word = [("v", ops.element(("s",))), ("a", 2), ("v", ops.element(("t",)))]
x = mixed.reduce([mixed.syllable(v, e) for v, e in word])
print("input  : s . a^2 . t")
print("normal :", x.syllables)
print("(one braid syllable st, with a^2 pulled to the front)")
print()

print("== the braid relation is invisible to the graph layer ==")
sts = mixed.normal([("v", ops.element(("s", "t", "s")))])
tst = mixed.normal([("v", ops.element(("t", "s", "t")))])
print("sts == tst:", mixed.equal(sts, tst))
print()

print("== initial vertices drive the canonical form ==")
x = path3.normal([("b", 1), ("a", 1), ("c", 1), ("b", 1)])
print("b a c b reduces to:", [(s.vertex, s.element) for s in x.syllables])
print("initial vertex set:", sorted(path3.initial_vertices(x)))

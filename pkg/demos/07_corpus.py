"""
Sweeping the small-algebra corpus
=================================

"""

import collections
from pathlib import Path

from colocal import is_colocal_by_conditions, is_colocal_type_structural
from colocal.corpus import read_manifest
from colocal.quiver import check_C1, check_C2, check_C3

corpus = read_manifest(Path(__file__).parent.parent / "tests" / "data" / "corpus_manifest.txt")
print(len(corpus), "admissible presentations")

verdicts = collections.Counter()
for qa in corpus:
    c1 = bool(check_C1(qa))
    key = (c1, bool(check_C2(qa)), c1 and bool(check_C3(qa)))
    verdicts[key] += 1
    assert is_colocal_by_conditions(qa) == bool(is_colocal_type_structural(qa))

for key, n in sorted(verdicts.items(), reverse=True):
    print("C1 C2 C3 =", key, n)

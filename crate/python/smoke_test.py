"""Smoke test for the downsets extension module.

Build and install first:  pip install --no-build-isolation ./crates/python
"""

import itertools
import json

import downsets


def brute_count(p):
    n = len(p)
    total = 0
    for bits in range(1 << n):
        s = [i for i in range(n) if bits >> i & 1]
        if p.is_downset(s):
            total += 1
    return total


def main():
    diamond = downsets.Poset(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
    assert diamond.count() == 6
    assert downsets.count_downsets(diamond) == 6
    assert len(diamond.downsets()) == 6
    assert downsets.Poset.from_text(diamond.to_text()) == diamond

    b3 = downsets.Poset.boolean(3)
    atoms = [1, 2, 4]
    terms = b3.decompose(atoms)
    assert sorted(t[2] for t in terms) == [1, 1, 1, 2, 2, 2, 2, 9]
    assert b3.count_via_decomposition(atoms) == 20 == brute_count(b3)

    bmm5 = downsets.Poset.boolean(5, trim="both")
    assert bmm5.count() == 6212
    assert downsets.Poset.chain(2).product(bmm5).count() == 3933651

    for perm in itertools.islice(itertools.permutations(range(4)), 5):
        covers = [(perm[a], perm[b]) for a, b in diamond.covers()]
        assert downsets.Poset(4, covers).is_isomorphic(diamond)

    assert downsets.dedekind(5) == 7581
    assert downsets.dedekind(6, "mu") == 7828354
    value, bmm, evaluations = downsets.dedekind_report(5, "gamma")
    assert (value, bmm, evaluations) == (7581, 6212, 80)
    assert downsets.dedekind(7, "standard") == 2414682040998

    assert downsets.table("nu") == "388,290,195,70,40,30,0,10,0,0,1\n"
    iso = json.loads(downsets.table("iso", "json"))
    assert len(iso["cells"]) == 34

    try:
        downsets.dedekind(6, "nu")
    except NotImplementedError:
        pass
    else:
        raise AssertionError("b(6) by the nu method should be rejected")
    try:
        downsets.Poset(2, [(0, 1), (1, 0)])
    except ValueError:
        pass
    else:
        raise AssertionError("cycle accepted")

    passed, ledger = downsets.verify()
    print(ledger, end="")
    print("smoke test ok")


if __name__ == "__main__":
    main()

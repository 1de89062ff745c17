"""Smoke test for the srsq extension module.

Build and install first:
    pip install maturin
    cd crates/py && maturin develop --release
"""

import json

import srsq


def main():
    pentagon = srsq.SimplicialComplex.named("cycle:5")
    assert pentagon.n == 5 and pentagon.dim == 1
    assert pentagon.f_vector() == [5, 5]
    ideal = pentagon.stanley_reisner()
    assert len(ideal.gens) == 5
    assert ideal.symbolic2_equals_square()["equal"]
    assert pentagon.is_gorenstein("Q")
    assert pentagon.is_cm_square("Q")

    triangle = srsq.MonomialIdeal(3, [[1, 1, 0], [0, 1, 1], [1, 0, 1]])
    verdict = triangle.symbolic2_equals_square()
    assert not verdict["equal"]
    assert verdict["certificate"]["kind"] == "failure"
    assert triangle.symbolic_power(2).contains([1, 1, 1])
    assert not triangle.power(2).contains([1, 1, 1])

    rp2 = srsq.SimplicialComplex.named("rp2")
    assert rp2.reduced_homology("F2")["betti"] == {"-1": 0, "0": 0, "1": 1, "2": 1}
    assert rp2.is_cohen_macaulay("Q") and not rp2.is_cohen_macaulay("F2")
    square = rp2.depth_square("Q")
    assert square["depth"] == 0 and square["dim"] == 3
    assert rp2.depth_symbolic_square("Q")["depth"] == 2

    audit = rp2.audit("Q,F2")
    assert not any(c["violated"] for c in audit["implications"])

    try:
        rp2.depth_square("Q", budget=5)
    except srsq.BudgetExceeded:
        pass
    else:
        raise AssertionError("expected BudgetExceeded")

    again = srsq.SimplicialComplex.from_json(rp2.to_json())
    assert again == rp2
    link, labels = rp2.link([1])
    assert link.f_vector() == [5, 5] and labels == [2, 3, 4, 5, 6]

    stellar = srsq.SimplicialComplex.named("cross-stellar:3")
    assert stellar.is_cm_square("F2")

    print(json.dumps({"ok": True, "pentagon": repr(ideal)}))


if __name__ == "__main__":
    main()

"""Smoke test for the quadlie_py extension.

Build and install it first, for example:

    cd crates/python && maturin develop --release
"""

from fractions import Fraction

import quadlie_py as q


def main():
    h3 = q.LieAlgebra.heisenberg(1)
    assert h3.dim == 3
    assert h3.bracket(0, 1) == ["0", "0", "1"]
    assert h3.is_nilpotent()
    assert h3.invariant_form_dims() == (4, 3, 1)
    assert h3.derivation_dims() == (6, 2)

    d4 = q.MetricLieAlgebra.oscillator([1])
    assert d4.algebra.labels == ["delta", "e1", "e2", "delta*"]
    assert d4.signature() == (3, 1)
    assert d4.algebra.metric_dimension() == 2
    assert d4.skew_derivation_dim() == 3
    assert d4.algebra.derived_series_dims() == [4, 3, 1, 0]

    d6 = q.MetricLieAlgebra.oscillator([Fraction(1, 2), 3], t=2, s="-1")
    assert d6.gram[0][0] == "2" and d6.gram[1][1] == "-1"
    assert q.MetricLieAlgebra.from_json(d6.to_json()).to_json() == d6.to_json()

    # The Euclidean plane extended by a rotation is d4.
    ext = q.double_extension(
        q.MetricLieAlgebra.euclidean(2),
        q.LieAlgebra.abelian(1),
        [[[0, -1], [1, 0]]],
    )
    assert ext.algebra.bracket(1, 2) == ["0", "0", "0", "1"]
    assert ext.gram == d4.gram

    try:
        q.double_extension(q.MetricLieAlgebra.euclidean(2), q.LieAlgebra.abelian(1), [[[1, 0], [0, 1]]])
    except ValueError as e:
        assert "not skew" in str(e)
    else:
        raise AssertionError("non-skew hom accepted")

    assert q.MetricLieAlgebra.mixed(2, "su").dim == 12

    passed, transcript = q.reproduce("lemma1-metric-dim", m=3, lam=[1, 2, 3])
    assert passed, transcript
    assert len(q.claims()) == 10

    print("quadlie_py smoke test passed")


if __name__ == "__main__":
    main()

import random
from fractions import Fraction as F

import pytest

from monicheb import (
    FareyPair,
    IntPoly,
    Interval,
    RatPoly,
    Verdict,
    bernstein_prefilter,
    certify_sup_bound,
    decide_sup_bound,
    poly_eval,
    rational_point_lower_bound,
    sup_norm_enclosure,
    verify_witness,
)

WITNESS = IntPoly([1, -3, 1])
PAIR = FareyPair.from_endpoints(F(1, 3), F(2, 5))
I13_25 = PAIR.interval()


class TestDecideSupBound:
    def test_table_bound_certifies(self):
        cert = decide_sup_bound(WITNESS, I13_25, F(1, 9))
        assert cert.verdict is Verdict.CERTIFIED_AT_MOST
        assert cert.method == "sturm"

    def test_tighter_bound_refutes_at_endpoint(self):
        cert = decide_sup_bound(WITNESS, I13_25, F(1, 10))
        assert cert.verdict is Verdict.REFUTED
        assert cert.refutation_point == F(1, 3)
        assert abs(poly_eval(WITNESS, cert.refutation_point)) > F(1, 10)

    def test_zero_poly_zero_bound(self):
        cert = decide_sup_bound(IntPoly(), I13_25, F(0))
        assert cert.verdict is Verdict.CERTIFIED_AT_MOST

    def test_negative_bound_rejected(self):
        with pytest.raises(ValueError):
            decide_sup_bound(WITNESS, I13_25, F(-1))

    def test_interior_touch_certifies(self):
        # |2x**2 - 1| touches 1 at x=0 and both endpoints of [-1, 1]
        f = IntPoly([-1, 0, 2])
        cert = decide_sup_bound(f, Interval(-1, 1), F(1))
        assert cert.verdict is Verdict.CERTIFIED_AT_MOST

    def test_interior_touch_irrational_location(self):
        # sup on an interval whose maximizer is not dyadic
        f = IntPoly([0, 0, 1])  # x**2 on [-2/3, 1/2]: sup = 4/9 at -2/3
        cert = decide_sup_bound(f, Interval(F(-2, 3), F(1, 2)), F(4, 9))
        assert cert.verdict is Verdict.CERTIFIED_AT_MOST
        cert2 = decide_sup_bound(f, Interval(F(-2, 3), F(1, 2)), F(4, 9) - F(1, 1000))
        assert cert2.verdict is Verdict.REFUTED
        assert abs(poly_eval(f, cert2.refutation_point)) > F(4, 9) - F(1, 1000)

    def test_interior_negative_dip(self):
        # h = B**2 - f**2 < 0 only well inside the interval
        f = IntPoly([0, 1]) * IntPoly([-1, 1])  # x(x-1), peak 1/4 at 1/2
        cert = decide_sup_bound(f, Interval(0, 1), F(1, 5))
        assert cert.verdict is Verdict.REFUTED
        point = cert.refutation_point
        assert 0 < point < 1 and abs(poly_eval(f, point)) > F(1, 5)

    def test_never_inconclusive_random(self):
        rng = random.Random(12)
        for _ in range(100):
            f = IntPoly([rng.randint(-20, 20) for _ in range(rng.randint(1, 7))])
            interval = Interval(F(-3, 2), F(5, 4))
            bound = F(rng.randint(0, 40), rng.randint(1, 8))
            cert = decide_sup_bound(f, interval, bound)
            assert cert.verdict is not Verdict.INCONCLUSIVE
            if cert.verdict is Verdict.REFUTED:
                assert abs(poly_eval(f, cert.refutation_point)) > bound


class TestBernsteinPrefilter:
    def test_easy_certify_depth_zero(self):
        cert = bernstein_prefilter(RatPoly([0, F(1, 2)]), Interval(0, 1), F(1))
        assert cert.verdict is Verdict.CERTIFIED_AT_MOST
        assert cert.depth == 0
        assert cert.method == "bernstein"

    def test_constant_refuted(self):
        cert = bernstein_prefilter(IntPoly([2]), Interval(0, 1), F(1))
        assert cert.verdict is Verdict.REFUTED

    def test_endpoint_equality_resolved_or_inconclusive(self):
        cert = bernstein_prefilter(WITNESS, I13_25, F(1, 9), max_depth=12)
        assert cert.verdict in (Verdict.CERTIFIED_AT_MOST, Verdict.INCONCLUSIVE)
        if cert.verdict is Verdict.INCONCLUSIVE:
            sturm = decide_sup_bound(WITNESS, I13_25, F(1, 9))
            assert sturm.verdict is Verdict.CERTIFIED_AT_MOST

    def test_depth_zero_limit(self):
        # needs at least one split to certify
        f = IntPoly([-1, 0, 2])
        cert = bernstein_prefilter(f, Interval(-1, 1), F(1), max_depth=0)
        assert cert.verdict is Verdict.INCONCLUSIVE

    def test_never_contradicts_sturm(self):
        rng = random.Random(21)
        for _ in range(150):
            f = IntPoly([rng.randint(-10, 10) for _ in range(rng.randint(1, 6))])
            interval = Interval(F(-1, 2), F(2, 3))
            bound = F(rng.randint(0, 30), rng.randint(1, 6))
            pre = bernstein_prefilter(f, interval, bound, max_depth=6)
            if pre.verdict is Verdict.INCONCLUSIVE:
                continue
            sturm = decide_sup_bound(f, interval, bound)
            assert pre.verdict == sturm.verdict


class TestPipeline:
    def test_pipeline_matches_sturm(self):
        rng = random.Random(31)
        for _ in range(60):
            f = IntPoly([rng.randint(-15, 15) for _ in range(rng.randint(1, 6))])
            interval = Interval(F(0), F(3, 4))
            bound = F(rng.randint(0, 25), rng.randint(1, 5))
            assert (
                certify_sup_bound(f, interval, bound).verdict
                == decide_sup_bound(f, interval, bound).verdict
            )


class TestEnclosure:
    def test_witness_sup(self):
        lo, hi = sup_norm_enclosure(WITNESS, I13_25, F(1, 1000))
        assert lo <= F(1, 9) <= hi
        assert hi - lo <= F(1, 1000)

    def test_constant(self):
        assert sup_norm_enclosure(RatPoly([F(-7, 2)]), I13_25, F(1, 10)) == (F(7, 2), F(7, 2))

    def test_identity_on_unit(self):
        lo, hi = sup_norm_enclosure(IntPoly([0, 1]), Interval(0, 1), F(1, 50))
        assert lo <= 1 <= hi

    def test_requires_positive_tol(self):
        with pytest.raises(ValueError):
            sup_norm_enclosure(WITNESS, I13_25, F(0))


class TestRationalPointLowerBound:
    def test_equality_case(self):
        assert rational_point_lower_bound(IntPoly([0, -1, 1]), F(1, 2)) == F(1, 4)

    def test_linear(self):
        assert rational_point_lower_bound(IntPoly([0, 1]), F(1, 2)) == F(1, 2)

    def test_witness_endpoint(self):
        assert rational_point_lower_bound(WITNESS, F(1, 3)) == F(1, 9)

    def test_rejects_integer_point(self):
        with pytest.raises(ValueError):
            rational_point_lower_bound(WITNESS, F(3))

    def test_rejects_non_monic(self):
        with pytest.raises(ValueError):
            rational_point_lower_bound(IntPoly([1, -3, 2]), F(1, 2))

    def test_bound_holds_random(self):
        rng = random.Random(8)
        for _ in range(300):
            coeffs = [rng.randint(-9, 9) for _ in range(rng.randint(1, 6))] + [1]
            f = IntPoly(coeffs)
            p = F(rng.randint(-20, 20), rng.randint(2, 9))
            if p.denominator < 2:
                continue
            value = rational_point_lower_bound(f, p)
            assert value >= F(1, p.denominator**f.degree)


class TestVerifyWitness:
    def test_table_entry(self):
        record = verify_witness(PAIR, WITNESS)
        assert record.certificate.verdict is Verdict.CERTIFIED_AT_MOST
        assert record.tm_upper == F(1, 3)
        assert record.bound == F(1, 9)
        assert record.is_proof_for(PAIR)

    def test_second_table_entry(self):
        pair = FareyPair.from_endpoints(F(1, 4), F(2, 7))
        record = verify_witness(pair, IntPoly([1, -4, 1]))
        assert record.certificate.verdict is Verdict.CERTIFIED_AT_MOST
        assert record.tm_upper == F(1, 4)

    def test_x_squared_refuted(self):
        record = verify_witness(PAIR, IntPoly([0, 0, 1]))
        assert record.certificate.verdict is Verdict.REFUTED
        assert not record.is_proof_for(PAIR)

    def test_rejects_non_monic(self):
        with pytest.raises(ValueError):
            verify_witness(PAIR, IntPoly([1, -3, -1]))

    def test_equality_chain(self):
        # certified record on denominators >= 2: sup equals the bound exactly
        record = verify_witness(PAIR, WITNESS)
        lo, hi = sup_norm_enclosure(WITNESS, I13_25, F(1, 10_000))
        assert lo <= record.bound <= hi
        anchor = PAIR.hi if PAIR.b1 <= PAIR.b2 else PAIR.lo
        assert rational_point_lower_bound(WITNESS, anchor) == record.bound

    def test_render_lines(self):
        record = verify_witness(PAIR, WITNESS)
        lines = record.render()
        assert "status=certified" in lines
        assert "bound=1/9" in lines
        assert any(line.startswith("method=") for line in lines)
        assert "tm_upper=1/3" in lines

    def test_certificate_render_refutation(self):
        cert = decide_sup_bound(WITNESS, I13_25, F(1, 10))
        lines = cert.render()
        assert "status=refuted" in lines
        assert "refutation_point=1/3" in lines


class TestSubadditivity:
    def test_product_of_witnesses(self):
        record = verify_witness(PAIR, WITNESS)
        prod = WITNESS * WITNESS
        lo, hi = sup_norm_enclosure(prod, I13_25, F(1, 100_000))
        assert hi <= record.bound * record.bound + F(1, 100_000)

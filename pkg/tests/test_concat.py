"""Concatenation, length transforms, and the bundled-table audit."""

import pytest

from eaqec.codes import Distance
from eaqec.concat import (
    AuditReport,
    TableTuple,
    audit_row,
    audit_tables,
    concatenate,
    derive_row,
    expurgate,
    extend,
    is_known_discrepancy,
    load_bundled_tables,
    maximal_entanglement_closure_check,
    parse_table_file,
)
from eaqec.eaqecc import (
    Concatenated,
    EaqeccParams,
    Expurgated,
    Extended,
    ea_singleton_defect,
    parse_params,
)
from eaqec.errors import (
    AlphabetMismatch,
    ParseError,
    ProvenanceMismatch,
    TooManyBlocks,
)

INNER422 = parse_params("4,2,2,0,2")


def outer4(text):
    code = parse_params(text)
    assert code.q == 4
    return code


class TestConcatenate:
    def test_worked_example(self):
        # [[4,2,2;0]]_2 block inside a maximal [[25,13,12;12]]_4 code
        outer = outer4("25,13,>=12,12,4")
        code = concatenate(INNER422, outer)
        assert code.render() == "[[100,26,>=24;24]]_2"
        assert code.net == 2
        assert not code.is_maximal
        defect = ea_singleton_defect(code)
        assert (defect.value, defect.label) == (52, "52-EAQMDS")
        prov = code.provenance
        assert isinstance(prov, Concatenated)
        assert prov.inner is INNER422 and prov.outer is outer

    def test_parameter_arithmetic(self):
        inner = parse_params("3,2,2,1,2")
        outer = outer4("5,3,2,1,4")
        code = concatenate(inner, outer)
        assert (code.n, code.k) == (15, 6)
        assert code.c == 1 * 5 + 1 * 2
        assert code.d == Distance.lower_bound(4)

    def test_distance_always_a_bound(self):
        outer = outer4("5,3,3,2,4")  # exact outer distance
        assert concatenate(INNER422, outer).d.kind == "bound"

    def test_alphabet_mismatch(self):
        with pytest.raises(AlphabetMismatch, match=r"2\^2 = 4, got 2"):
            concatenate(INNER422, parse_params("5,3,2,1,2"))
        with pytest.raises(AlphabetMismatch):
            concatenate(parse_params("3,2,2,1,2"), parse_params("5,3,2,1,8"))

    def test_maximal_closure_exhaustive(self):
        # maximal components concatenate to a maximal code
        for n1, k1 in ((2, 1), (3, 1), (3, 2), (4, 2)):
            inner = EaqeccParams(
                q=2, n=n1, k=k1, d=Distance.lower_bound(2), c=n1 - k1
            )
            for n2 in range(1, 7):
                for k2 in range(0, n2 + 1):
                    outer = EaqeccParams(
                        q=2 ** k1, n=n2, k=k2,
                        d=Distance.lower_bound(1), c=n2 - k2,
                    )
                    assert maximal_entanglement_closure_check(inner, outer)
                    code = concatenate(inner, outer)
                    assert code.c == n1 * n2 - k1 * k2
                    assert code.is_maximal

    def test_closure_vacuous_when_not_maximal(self):
        outer = outer4("5,3,2,0,4")
        assert not outer.is_maximal
        assert maximal_entanglement_closure_check(INNER422, outer)


class TestExtend:
    def test_basic(self):
        base = concatenate(INNER422, outer4("5,3,2,1,4"))
        out = extend(base, 3)
        assert (out.n, out.k, out.c) == (base.n + 3, base.k, base.c)
        assert out.net == base.net
        assert out.d == Distance.lower_bound(base.d.require())
        assert out.provenance == Extended(base, 3)

    def test_zero_is_identity(self):
        base = concatenate(INNER422, outer4("5,3,2,1,4"))
        assert extend(base, 0) is base

    def test_validation(self):
        base = parse_params("3,2,2,1,2")
        with pytest.raises(ValueError):
            extend(base, -1)
        with pytest.raises(ValueError):
            extend(base, 1.5)

    def test_on_literal_tuple(self):
        out = extend(parse_params("3,2,2,1,2"), 2)
        assert out.render() == "[[5,2,>=2;1]]_2"


class TestExpurgate:
    def test_basic(self):
        base = concatenate(INNER422, outer4("23,1,>=11,22,4"))
        out = expurgate(base, 2)
        assert (out.n, out.k, out.c) == (base.n - 2, base.k, base.c + 2)
        assert out.net == base.net - 2
        assert out.d.require() == base.d.require()
        assert out.provenance == Expurgated(base, 2)

    def test_needs_concatenation(self):
        with pytest.raises(ProvenanceMismatch):
            expurgate(parse_params("92,2,>=22,0,2"), 1)

    def test_needs_the_standard_inner(self):
        base = concatenate(parse_params("3,2,2,1,2"), outer4("5,3,2,1,4"))
        with pytest.raises(ProvenanceMismatch, match=r"4,2,2;0"):
            expurgate(base, 1)

    def test_block_budget(self):
        base = concatenate(INNER422, outer4("5,3,2,1,4"))
        assert expurgate(base, 5).n == base.n - 5
        with pytest.raises(TooManyBlocks):
            expurgate(base, 6)

    def test_amount_validation(self):
        base = concatenate(INNER422, outer4("5,3,2,1,4"))
        with pytest.raises(ValueError):
            expurgate(base, 0)
        with pytest.raises(ValueError):
            expurgate(base, -2)


GOOD_LINE = "I|4,2,2,0,2|23,1*,11,?,4|base|92,2*,>=22,?,2|[[92,2*,21]]|[[92,2,20]]"


class TestParseTableFile:
    def test_single_row(self):
        (row,) = parse_table_file(GOOD_LINE)
        assert row.table == "I" and row.index == 1
        assert row.inner.render() == "[[4,2,2;0]]_2"
        assert row.outer.k_is_net and row.outer.c is None
        assert row.transform == ("base", 0)
        assert row.published.render() == "[[92,2*,>=22]]_2"
        assert row.comparators == ("[[92,2*,21]]", "[[92,2,20]]")
        assert row.label() == "I:001 base"

    def test_comments_and_blanks_skipped(self):
        text = "# heading\n\n" + GOOD_LINE + "\n   \n"
        assert len(parse_table_file(text)) == 1

    def test_indices_count_per_table(self):
        iv = "IV|3,2,2,1,2|2,1,2,1,4|base|6,2,4,4,2|opt_d=4|"
        rows = parse_table_file("\n".join([GOOD_LINE, iv, GOOD_LINE]))
        assert [(r.table, r.index) for r in rows] == [("I", 1), ("IV", 1), ("I", 2)]

    def test_transform_labels(self):
        ext = GOOD_LINE.replace("|base|", "|extend+2|")
        exp = GOOD_LINE.replace("|base|", "|expurgate-1|")
        assert parse_table_file(ext)[0].label() == "I:001 extend+2"
        assert parse_table_file(exp)[0].label() == "I:001 expurgate-1"

    @pytest.mark.parametrize(
        "line, match",
        [
            ("I|4,2,2,0,2|23,1*,11,?,4|base|92,2*,>=22,?,2|x", "7 '|'-separated"),
            (GOOD_LINE.replace("I|", "V|", 1), "unknown table"),
            (GOOD_LINE.replace("4,2,2,0,2", "4,2*,2,0,2"), "fully specified"),
            (GOOD_LINE.replace("4,2,2,0,2", "4,2,2,?,2"), "fully specified"),
            (GOOD_LINE.replace("23,1*,11,?,4", "23,1,11,?,4"), "plain k with c"),
            (GOOD_LINE.replace("|base|", "|shorten-1|"), "unknown transform"),
            (GOOD_LINE.replace("|base|", "|extend+0|"), ">= 1"),
            (GOOD_LINE.replace("|base|", "|extend+x|"), "bad transform"),
            (GOOD_LINE.replace("4,2,2,0,2", "4,2,2,0"), "n,k,d,c,q"),
            (GOOD_LINE.replace("4,2,2,0,2", "4,two,2,0,2"), "bad tuple"),
        ],
    )
    def test_rejects(self, line, match):
        with pytest.raises(ParseError, match=match):
            parse_table_file(line)

    def test_error_carries_line_number(self):
        text = GOOD_LINE + "\n# ok\nI|bad\n"
        with pytest.raises(ParseError, match="line 3"):
            parse_table_file(text)


@pytest.fixture(scope="module")
def rows():
    return load_bundled_tables()


@pytest.fixture(scope="module")
def report(rows):
    return audit_tables(rows)


class TestBundledTables:
    def test_row_counts(self, rows):
        assert len(rows) == 141
        per = {}
        for r in rows:
            per[r.table] = per.get(r.table, 0) + 1
        assert per == {"I": 33, "II": 68, "III": 26, "IV": 14}

    def test_net_form_tables_use_the_standard_inner(self, rows):
        for r in rows:
            if r.table != "IV":
                t = r.inner
                assert (t.n, t.k, t.d.require(), t.c, t.q) == (4, 2, 2, 0, 2)
                assert r.outer.k_is_net and r.outer.q == 4
                assert r.published.k_is_net and r.published.c is None

    def test_table_iv_prints_everything(self, rows):
        for r in rows:
            if r.table == "IV":
                assert r.transform == ("base", 0)
                assert not r.published.k_is_net and r.published.c is not None

    def test_audit_summary(self, report):
        assert isinstance(report, AuditReport)
        assert report.total == 141
        assert report.consistent == 140
        assert len(report.failures) == 1

    def test_single_failure_is_the_known_one(self, report):
        (bad,) = report.failures
        assert is_known_discrepancy(bad)
        assert bad.row.table == "IV"
        assert bad.row.published.render() == "[[46,2,36;34]]_2"
        (mm,) = bad.mismatches
        assert (mm.field, mm.expected, mm.published) == ("c", 44, 34)

    def test_base_row_identities(self, rows):
        # doubling map onto the outer parameters for the net-form tables
        for r in rows:
            if r.table == "IV" or r.transform != ("base", 0):
                continue
            assert r.published.n == 4 * r.outer.n
            assert r.published.k == 2 * r.outer.k
            assert r.published.d.require() == 2 * r.outer.d.require()

    def test_transform_rows_track_their_base(self, rows):
        base = {}
        for r in rows:
            if r.table == "IV":
                continue
            name, t = r.transform
            if name == "base":
                base[r.table] = r
                continue
            b = base[r.table].published
            p = r.published
            assert r.outer == base[r.table].outer
            assert p.d.require() == b.d.require()
            if name == "extend":
                assert (p.n, p.k) == (b.n + t, b.k)
            else:
                assert (p.n, p.k) == (b.n - t, b.k - t)

    def test_net_form_invariance_explicit(self, rows):
        # the printed columns cannot depend on the unprinted outer entanglement
        sample = [r for r in rows if r.table == "II"][:10]
        for r in sample:
            derived = derive_row(r)
            for c2 in (0, 1, 2):
                outer = EaqeccParams(
                    q=4, n=r.outer.n, k=r.outer.k + c2, d=r.outer.d, c=c2
                )
                code = concatenate(parse_params("4,2,2,0,2"), outer)
                name, t = r.transform
                if name == "extend":
                    code = extend(code, t)
                elif name == "expurgate":
                    code = expurgate(code, t)
                assert (code.n, code.net, code.d.require()) == (
                    derived.n, derived.net, derived.d.require()
                )

    def test_derive_row_table_iv(self, rows):
        row = next(r for r in rows if r.table == "IV")
        code = derive_row(row)
        assert (code.n, code.k, code.c) == (6, 2, 4)

    def test_corrupted_row_is_flagged_as_unknown(self, rows):
        row = next(r for r in rows if r.table == "I")
        broken = TableTuple(
            n=row.published.n + 1,
            k=row.published.k,
            k_is_net=row.published.k_is_net,
            d=row.published.d,
            c=row.published.c,
            q=row.published.q,
        )
        verdict = audit_row(
            type(row)(
                table=row.table,
                index=row.index,
                inner=row.inner,
                outer=row.outer,
                transform=row.transform,
                published=broken,
                comparators=row.comparators,
            )
        )
        assert not verdict.consistent
        assert [m.field for m in verdict.mismatches] == ["n"]
        assert not is_known_discrepancy(verdict)

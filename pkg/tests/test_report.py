from __future__ import annotations

from design_sampler.constructions import triple_sampling
from design_sampler.graphs import clique_on, cycle_through, path_through
from design_sampler.report import format_row, report
from design_sampler.sampler import identity_sampling
from design_sampler.designs import complete_design
from design_sampler.tables import c4_p3_sampling, n23_sampling


def test_format_row():
    assert format_row(clique_on([0, 1, 2], 5), clique_on([0, 1], 5), True) == "[01]2"
    assert format_row(clique_on([0, 1, 2, 5], 23), clique_on([0, 1, 2], 23), False) \
        == "[0,1,2],5"
    c = cycle_through([0, 1, 2, 6], 7)
    assert format_row(c, path_through([0, 1, 2], 7), True) == "[012]6"


def test_starter_report_rows():
    text = report(triple_sampling(14))
    lines = text.splitlines()
    assert len(lines) == 26
    assert lines[0] == "T1\t[01]2"
    assert sum(line.startswith("T4^2") for line in lines) == 2


def test_lift_reports():
    assert len(report(n23_sampling()).splitlines()) == 35
    assert len(report(c4_p3_sampling("affine-square")).splitlines()) == 5


def test_plain_report_and_empty():
    text = report(identity_sampling(complete_design(4, "K3")))
    assert len(text.splitlines()) == 4 and "->" in text
    empty = identity_sampling(complete_design(2, "K2"))
    assert report(empty).count("\n") == 1

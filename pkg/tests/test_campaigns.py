from subcubic_idom.campaigns import (
    EXCEPTION,
    FAIL,
    campaign_characterization,
    campaign_conjecture,
    campaign_families,
    campaign_half_bound,
    fcubic_specs,
)


def test_half_bound_small():
    rep = campaign_half_bound(8)
    assert rep.passed and rep.examined == sum([1, 2, 6, 10, 29, 64, 194])
    assert "result: PASSED" in rep.summary()


def test_half_bound_worker_pool_gives_same_records():
    serial = campaign_half_bound(7)
    pooled = campaign_half_bound(7, workers=2)
    assert serial.records == pooled.records


def test_half_bound_fault_injection():
    rep = campaign_half_bound(9, skip_cases=["deg2-apex"])
    assert not rep.passed
    assert all("isolated" in detail for _, detail in rep.violations)
    assert "fault injection" in rep.summary()


def test_characterization_small():
    rep = campaign_characterization(6)
    assert rep.passed
    labels = {n: sorted(lab.split(" ")[0] for lab, _ in rep.extremal[n]) for n in rep.extremal}
    assert labels[2] == ["CORONA_PATH(1)"]
    assert labels[4] == ["CORONA_PATH(2)", "SPORADIC(1)"]
    assert labels[6] == ["CORONA_CYCLE(3)", "CORONA_PATH(3)", "SPORADIC(2)", "SPORADIC(3)",
                         "SPORADIC(4)", "SPORADIC(5)"]


def test_conjecture_to_ten():
    rep = campaign_conjecture(10)
    assert rep.passed and rep.examined == 1 + 2 + 5 + 19
    exceptions = sorted(d for s, _, d in rep.records if s == EXCEPTION)
    assert exceptions == [
        "C_5xK_2: i=4 > 3n/8 with n=10",
        "K_{3,3}: i=3 > 2n/5 with n=6",
        "K_{3,3}: i=3 > 3n/8 with n=6",
    ]


def test_report_rendering():
    rep = campaign_conjecture(6)
    lines = rep.render().splitlines()
    records = [ln.split("\t") for ln in lines if "\t" in ln]
    assert len(records) == len(rep.records)
    assert all(len(r) == 3 and r[0] in ("PASS", "FAIL", "EXCEPTION") for r in records)


def test_fcubic_specs_cover_matchings():
    specs = fcubic_specs(4)
    assert ("BB", ()) in specs
    assert ("RRRR", ((0, 1), (2, 3))) in specs and ("RRRR", ((0, 3), (1, 2))) in specs
    assert all(c.count("R") % 2 == 0 for c, _ in specs)


def test_families_campaign_and_corruption():
    rep = campaign_families(max_k=3, max_gh=2, every_min_set=False)
    assert rep.passed and rep.examined == 4 + 5
    bad = campaign_families(max_k=3, max_gh=1, corrupt="drop-pair", every_min_set=False)
    assert not bad.passed
    assert all(s != FAIL or "fcubic" in d for s, _, d in bad.records)

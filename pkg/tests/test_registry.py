"""
Tests for Verifier Registry
"""

import pytest

from core.verify.registry import (
    UnknownVerifierError,
    Verifier,
    VerifierRegistry,
    get_registry,
    list_verifiers,
    run_verifier,
)
from core.verify.report import FAIL, INFO, PASS, VerificationReport

EXPECTED_IDS = [
    "lin-encodes",
    "iterate-lin",
    "lmt-lin-commute",
    "lin-tot-dual",
    "lmt-self-dual",
    "mt-dual-search",
    "black-lin",
    "white-tot",
    "black-lmt",
    "white-lmt",
    "lmt-confluence",
    "totcom-dim4",
]


class TestRegistry:
    """검증기 레지스트리 테스트"""

    def test_default_verifiers(self):
        """기본 검증기 12개"""
        assert [theorem_id for theorem_id, _ in list_verifiers()] == EXPECTED_IDS

    def test_singleton(self):
        assert get_registry() is get_registry()

    def test_unknown_verifier(self):
        with pytest.raises(UnknownVerifierError) as exc_info:
            get_registry().get("no-such-theorem")
        assert "lin-encodes" in str(exc_info.value)

    def test_default_operads(self):
        registry = get_registry()

        assert registry.get("lmt-self-dual").default_operad == "As"
        assert registry.get("mt-dual-search").default_operad == "Dend"
        assert registry.get("totcom-dim4").default_operad is None

    def test_register_custom(self):
        """새 검증기 등록"""
        registry = VerifierRegistry()
        registry.register(
            Verifier(
                "always-info",
                "항상 INFO",
                "Com",
                lambda p, palette, sigma: VerificationReport(
                    "always-info", INFO, {"operad": p.name}
                ),
            )
        )

        report = registry.run("always-info", None, ["c0"])
        assert report.details == {"operad": "Com"}
        assert len(registry.list_verifiers()) == len(EXPECTED_IDS) + 1


class TestRunVerifier:
    """기본 대상으로 검증기 실행"""

    def test_lin_encodes_default(self, two_colors):
        assert run_verifier("lin-encodes", None, two_colors).status == PASS

    def test_explicit_operad(self, assoc, two_colors):
        report = run_verifier("black-lin", assoc, two_colors)
        assert report.status == PASS
        assert report.details["operad"] == "As"

    def test_lmt_confluence_default(self, two_colors):
        """LMT Com 은 균형 트리에서 갈라지므로 FAIL과 반례"""
        report = run_verifier("lmt-confluence", None, two_colors)

        assert report.status == FAIL
        assert report.details["operad"] == "Com"
        assert report.witness["monomial"]
        assert len(report.witness["normal_forms"]) == 2

    @pytest.mark.slow
    def test_totcom_reports_info(self, two_colors):
        assert run_verifier("totcom-dim4", None, two_colors).status == INFO

    @pytest.mark.slow
    def test_mt_dual_search_default(self, two_colors):
        """Dend 레벨 매칭의 쌍대 탐색"""
        report = run_verifier("mt-dual-search", None, two_colors)

        assert report.status != FAIL
        assert report.details["operad"] == "Dend"

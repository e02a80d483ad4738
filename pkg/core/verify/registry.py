"""
Verifier Registry

검증기 id와 실행 함수를 등록하고 관리합니다.
"""

from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from core.compat.sigma import SigmaChoice
from core.compat.verify import verify_iterate_lin, verify_lin_encodes, verify_lmt_lin_commute
from core.exceptions import UnknownSymbolError
from core.koszul.dual import koszul_dual
from core.koszul.isomorphism import find_isomorphism
from core.koszul.verify import (
    verify_lin_tot_duality,
    verify_lmt_self_dual,
    verify_matching_duality,
)
from core.manin.verify import (
    verify_black_lin,
    verify_black_lmt,
    verify_white_lmt,
    verify_white_tot,
)
from core.presentations.catalog import builtin
from core.presentations.model import Presentation
from core.rewrite.verify import verify_lmt_confluence, verify_totcom_dim4
from core.verify.report import VerificationReport
from utils.logging import get_logger

logger = get_logger(__name__)

Runner = Callable[[Presentation, Sequence[str], Optional[SigmaChoice]], VerificationReport]


class UnknownVerifierError(UnknownSymbolError):
    """등록되지 않은 검증기 id"""


@dataclass(frozen=True)
class Verifier:
    """
    등록된 검증기.

    Attributes:
        theorem_id: 검증기 id
        description: 한 줄 설명
        default_operad: 대상이 주어지지 않을 때 쓰는 내장 표현 (없으면 None)
        runner: (표현, 색 팔레트, σ) → 보고서
    """

    theorem_id: str
    description: str
    default_operad: Optional[str]
    runner: Runner

    def run(
        self,
        p: Optional[Presentation],
        palette: Sequence[str],
        sigma: Optional[SigmaChoice] = None,
    ) -> VerificationReport:
        if p is None and self.default_operad is not None:
            p = builtin(self.default_operad)
        logger.info(f"검증 시작: {self.theorem_id} ({p.name if p else '-'}, 색 {len(palette)}개)")
        report = self.runner(p, palette, sigma)
        logger.info(f"검증 결과: {self.theorem_id} → {report.status}")
        return report


def _by_operad(fn: Callable[[Presentation, Sequence[str]], VerificationReport]) -> Runner:
    return lambda p, palette, sigma: fn(p, palette)


def _lmt_self_dual(p, palette, sigma):
    self_dual = find_isomorphism(koszul_dual(p), p) is not None
    return verify_lmt_self_dual(p, palette, self_dual=self_dual)


def _mt_dual_search(p, palette, sigma):
    return verify_matching_duality(p, palette, sigma)


def _totcom_dim4(p, palette, sigma):
    return verify_totcom_dim4(palette)


class VerifierRegistry:
    """
    검증기 레지스트리.

    기본 검증기 12개를 등록하며, 새 검증기를 추가할 수 있습니다.
    """

    def __init__(self):
        self._verifiers: Dict[str, Verifier] = {}
        self._register_default_verifiers()

    def _register_default_verifiers(self) -> None:
        defaults = [
            Verifier(
                "lin-encodes",
                "Lin P 관계 = 모든 λ에서의 선형결합 관계",
                "Com",
                _by_operad(verify_lin_encodes),
            ),
            Verifier(
                "iterate-lin",
                "Lin_Ω'(Lin_Ω P) = Lin_{Ω'×Ω} P",
                "Com",
                _by_operad(verify_iterate_lin),
            ),
            Verifier(
                "lmt-lin-commute",
                "LMT(Lin P) = Lin(LMT P) (층 교환)",
                "Com",
                _by_operad(verify_lmt_lin_commute),
            ),
            Verifier(
                "lin-tot-dual",
                "(Lin P)^! = Tot(P^!), (Tot P)^! = Lin(P^!)",
                "Com",
                _by_operad(verify_lin_tot_duality),
            ),
            Verifier("lmt-self-dual", "(LMT P)^! = LMT(P^!)", "As", _lmt_self_dual),
            Verifier("mt-dual-search", "(MT^σ P)^! = MT^τ(P^!) 인 τ 탐색", "Dend", _mt_dual_search),
            Verifier("black-lin", "Lin(Lie) ● P ≅ Lin P", "Com", _by_operad(verify_black_lin)),
            Verifier("white-tot", "Tot(Com) ○ P ≅ Tot P", "Lie", _by_operad(verify_white_tot)),
            Verifier("black-lmt", "LMT(Lie) ● P ≅ LMT P", "Com", _by_operad(verify_black_lmt)),
            Verifier("white-lmt", "LMT(Com) ○ P ≅ LMT P", "Lie", _by_operad(verify_white_lmt)),
            Verifier(
                "lmt-confluence",
                "P 합류 ⇒ LMT P 합류",
                "Com",
                _by_operad(verify_lmt_confluence),
            ),
            Verifier("totcom-dim4", "dim TotCom(4)와 Com∘Com 합성곱 차원", None, _totcom_dim4),
        ]
        for verifier in defaults:
            self.register(verifier)

    def register(self, verifier: Verifier) -> None:
        self._verifiers[verifier.theorem_id] = verifier
        logger.debug(f"검증기 등록: {verifier.theorem_id}")

    def get(self, theorem_id: str) -> Verifier:
        """
        Raises:
            UnknownVerifierError: 등록되지 않은 id일 때
        """
        try:
            return self._verifiers[theorem_id]
        except KeyError:
            raise UnknownVerifierError(
                f"알 수 없는 검증기입니다: {theorem_id} (사용 가능: {', '.join(self._verifiers)})"
            ) from None

    def list_verifiers(self) -> List[Tuple[str, str]]:
        return [(v.theorem_id, v.description) for v in self._verifiers.values()]

    def run(
        self,
        theorem_id: str,
        p: Optional[Presentation],
        palette: Sequence[str],
        sigma: Optional[SigmaChoice] = None,
    ) -> VerificationReport:
        return self.get(theorem_id).run(p, palette, sigma)


_registry: Optional[VerifierRegistry] = None


def get_registry() -> VerifierRegistry:
    global _registry
    if _registry is None:
        _registry = VerifierRegistry()
    return _registry


def list_verifiers() -> List[Tuple[str, str]]:
    return get_registry().list_verifiers()


def run_verifier(
    theorem_id: str,
    p: Optional[Presentation],
    palette: Sequence[str],
    sigma: Optional[SigmaChoice] = None,
) -> VerificationReport:
    return get_registry().run(theorem_id, p, palette, sigma)


__all__ = [
    "Verifier",
    "VerifierRegistry",
    "UnknownVerifierError",
    "get_registry",
    "list_verifiers",
    "run_verifier",
]

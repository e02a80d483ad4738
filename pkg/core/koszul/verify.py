"""
Koszul Verifiers

코쥘 쌍대와 호환 구성 사이의 쌍대성 항등식을 확인합니다.
"""

from itertools import islice
from typing import Dict, List, Optional, Sequence, Tuple

from config import get_config
from core.compat.constructions import (
    leveled_matching,
    linear_compat,
    matching_admissible,
    matching_compat,
    total_compat,
)
from core.compat.sigma import SigmaChoice, count_matching, enumerate_sigma_choices
from core.koszul.dual import double_dual_map, dual_component, koszul_dual, pairing_blocks
from core.koszul.isomorphism import (
    find_isomorphism,
    find_scaling,
    presentations_isomorphic,
    render_scaled_map,
)
from core.presentations.catalog import builtin, list_builtins
from core.presentations.closure import closed_relations, span_witness
from core.presentations.model import Presentation
from core.trees.symbols import Symbol
from core.verify.report import FAIL, PASS, VerificationReport
from utils.logging import get_logger
from utils.progress import progress

logger = get_logger(__name__)

# 쌍대가 알려진 내장 오퍼라드 쌍
CLASSICAL_DUALS: Tuple[Tuple[str, str], ...] = (
    ("Com", "Lie"),
    ("Lie", "Com"),
    ("As", "As"),
    ("PreLie", "Perm"),
)

# Dend의 볼테라 매칭 선택: I_a(y)I_b(z) = I_a(yI_b(z)) + I_b(I_a(y)z)
DEND_VOLTERRA_SIGMA = "r1:c(1,1)=(12),(12); r2:c(1,1)=(12); r3:c(1,1)=e,(12)"


def identity_map(p: Presentation) -> Dict[Symbol, Symbol]:
    return {g.symbol: g.symbol for g in p.generators}


def verify_classical_duals() -> VerificationReport:
    """dual(Com) ≅ Lie, dual(Lie) ≅ Com, dual(As) ≅ As, dual(PreLie) ≅ Perm"""
    checks: Dict[str, bool] = {}
    maps: Dict[str, Dict[str, str]] = {}
    for source, target in CLASSICAL_DUALS:
        label = f"{source}!≅{target}"
        scaled = find_isomorphism(koszul_dual(builtin(source)), builtin(target))
        checks[label] = scaled is not None
        if scaled is not None:
            maps[label] = render_scaled_map(scaled)
    return VerificationReport.from_checks("koszul-calibration", checks, maps=maps)


def verify_involution(names: Optional[Sequence[str]] = None) -> VerificationReport:
    """(P^!)^! ≅ P (이름 대응 x_dual_dual = x)"""
    checks: Dict[str, bool] = {}
    witnesses: Dict[str, Dict] = {}
    for name in names or list_builtins():
        p = builtin(name)
        twice = koszul_dual(koszul_dual(p))
        checks[name] = presentations_isomorphic(twice, p, double_dual_map(p))
        if not checks[name]:
            witnesses[name] = span_witness(twice, p) or {}
    return VerificationReport.from_checks("koszul-involution", checks, witnesses or None)


def verify_lin_tot_duality(p: Presentation, palette: Sequence[str]) -> VerificationReport:
    """
    (Lin P)^! = Tot(P^!), (Tot P)^! = Lin(P^!).

    색 복제의 쌍대는 쌍대의 색 복제와 같은 기호(x_dual@ω)를 가지므로 항등 대응으로 비교합니다.
    """
    dual_p = koszul_dual(p)
    pairs = (
        ("(Lin P)!=Tot(P!)", koszul_dual(linear_compat(p, palette)), total_compat(dual_p, palette)),
        ("(Tot P)!=Lin(P!)", koszul_dual(total_compat(p, palette)), linear_compat(dual_p, palette)),
    )
    checks: Dict[str, bool] = {}
    witnesses: Dict[str, Dict] = {}
    for label, left, right in pairs:
        checks[label] = presentations_isomorphic(left, right, identity_map(left))
        if not checks[label]:
            witnesses[label] = span_witness(left, right) or {}
    return VerificationReport.from_checks(
        "lin-tot-dual", checks, witnesses or None, operad=p.name, colors=list(palette)
    )


def verify_lmt_self_dual(
    p: Presentation, palette: Sequence[str], self_dual: bool = False
) -> VerificationReport:
    """
    (LMT P)^! = LMT(P^!).

    self_dual이면 P^! ≅ P 대응을 색마다 올려 (LMT P)^! ≅ LMT P 도 확인합니다.
    """
    lmt = leveled_matching(p, palette)
    left = koszul_dual(lmt)
    right = leveled_matching(koszul_dual(p), palette)
    checks = {"(LMT P)!=LMT(P!)": presentations_isomorphic(left, right, identity_map(left))}
    details: Dict[str, object] = {"operad": p.name, "colors": list(palette)}
    if self_dual:
        base = find_isomorphism(koszul_dual(p), p)
        checks["P!≅P"] = base is not None
        if base is not None:
            lifted = {
                Symbol(s.name, color): Symbol(t.name, color)
                for s, (t, _) in base.items()
                for color in palette
            }
            scaled = find_scaling(left, lmt, lifted)
            checks["(LMT P)!≅LMT P"] = scaled is not None
            if scaled is not None:
                details["map"] = render_scaled_map(scaled)
    witness = None
    if not checks["(LMT P)!=LMT(P!)"]:
        witness = span_witness(left, right)
    return VerificationReport.from_checks("lmt-self-dual", checks, witness, **details)


def search_dual_matching(
    p: Presentation, palette: Sequence[str], sigma: SigmaChoice
) -> Tuple[Optional[SigmaChoice], int]:
    """
    (MT^σ P)^! ≅ MT^τ(P^!) 인 허용 τ를 찾습니다 (항등원부터).

    Returns:
        (찾은 τ 또는 None, 시도한 후보 수)
    """
    target = koszul_dual(matching_compat(p, palette, sigma))
    dual_p = koszul_dual(p)
    limit = get_config().engine.max_sigma_search
    total = min(count_matching(dual_p, palette), limit)
    tried = 0
    candidates = islice(enumerate_sigma_choices(dual_p, palette), limit)
    for tau in progress(candidates, desc="쌍대 σ 탐색", total=total):
        tried += 1
        if not matching_admissible(dual_p, palette, tau):
            continue
        candidate = matching_compat(dual_p, palette, tau, check=False)
        if presentations_isomorphic(target, candidate, identity_map(target)):
            logger.info(f"{p.name}: σ = {sigma} 의 쌍대 매칭 τ = {tau} (후보 {tried}개 시도)")
            return tau, tried
    logger.warning(f"{p.name}: σ = {sigma} 의 쌍대 매칭을 찾지 못했습니다 (후보 {tried}개)")
    return None, tried


def verify_matching_duality(
    p: Presentation, palette: Sequence[str], sigma: Optional[SigmaChoice] = None
) -> VerificationReport:
    """
    σ-매칭의 쌍대가 P^!의 어떤 τ-매칭인지 찾습니다.

    σ가 항등이면 τ도 항등이어야 합니다 (레벨 매칭의 자기 쌍대성).
    """
    sigma = sigma or SigmaChoice()
    tau, tried = search_dual_matching(p, palette, sigma)
    checks = {"found": tau is not None}
    if sigma.is_identity():
        checks["identity→identity"] = tau is not None and tau.is_identity()
    details = {
        "operad": p.name,
        "colors": list(palette),
        "sigma": str(sigma),
        "tau": str(tau) if tau is not None else None,
        "candidates_tried": tried,
    }
    report = VerificationReport.from_checks("mt-dual-search", checks, **details)
    if report.status == FAIL:
        report.witness = {"sigma": str(sigma), "candidates_tried": tried}
    return report


def rank_complementarity(p: Presentation) -> Dict[int, Tuple[int, int, int]]:
    """항수별 (dim R, dim R^⊥, dim T(M^∨)^{(2)})"""
    out = {}
    for block in pairing_blocks(p):
        dim_r = len(closed_relations(p, block.arity, 2))
        dim_perp = len(dual_component(p, block))
        out[block.arity] = (dim_r, dim_perp, block.dimension)
    return out


def complementarity_report(names: Optional[List[str]] = None) -> VerificationReport:
    checks = {}
    details = {}
    for name in names or list_builtins():
        table = rank_complementarity(builtin(name))
        details[name] = table
        checks[name] = all(r + perp == total for r, perp, total in table.values())
    status = PASS if all(checks.values()) else FAIL
    return VerificationReport("rank-complementarity", status, {"checks": checks, "ranks": details})


__all__ = [
    "CLASSICAL_DUALS",
    "DEND_VOLTERRA_SIGMA",
    "identity_map",
    "verify_classical_duals",
    "verify_involution",
    "verify_lin_tot_duality",
    "verify_lmt_self_dual",
    "search_dual_matching",
    "verify_matching_duality",
    "rank_complementarity",
    "complementarity_report",
]

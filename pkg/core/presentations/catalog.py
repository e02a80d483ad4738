"""
Builtin Catalog

표준 오퍼라드 표현을 DSL 텍스트로 보관하고 필요할 때 파싱합니다.
"""

from functools import lru_cache
from typing import Dict, List

from core.exceptions import UnknownSymbolError
from core.presentations.model import Presentation
from core.presentations.parser import parse

BUILTIN_SOURCES: Dict[str, str] = {
    "Com": """
operad Com {
    gen m:2 symmetric;
    rel m(m(1,2),3) - m(m(2,3),1);
    rel m(m(1,2),3) - m(m(3,1),2);
}
""",
    "Lie": """
operad Lie {
    gen b:2 antisymmetric;
    # 야코비 항등식
    rel b(b(1,2),3) + b(b(2,3),1) + b(b(3,1),2);
}
""",
    "As": """
operad As {
    gen m:2;
    rel m(m(1,2),3) - m(1,m(2,3));
}
""",
    "PreLie": """
operad PreLie {
    gen m:2;
    # 왼쪽 pre-Lie: 결합자가 앞의 두 변수에 대해 대칭
    rel m(m(1,2),3) - m(1,m(2,3)) - m(m(2,1),3) + m(2,m(1,3));
}
""",
    "Perm": """
operad Perm {
    gen m:2;
    rel m(m(1,2),3) - m(1,m(2,3));
    rel m(m(1,2),3) - m(m(2,1),3);
}
""",
    "Nov": """
operad Nov {
    gen m:2;
    rel m(m(1,2),3) - m(1,m(2,3)) - m(m(2,1),3) + m(2,m(1,3));
    rel m(m(1,2),3) - m(m(1,3),2);
}
""",
    "Dend": """
operad Dend {
    gen prec:2;
    gen succ:2;
    rel r1: prec(prec(1,2),3) - prec(1,prec(2,3)) - prec(1,succ(2,3));
    rel r2: prec(succ(1,2),3) - succ(1,prec(2,3));
    rel r3: succ(prec(1,2),3) + succ(succ(1,2),3) - succ(1,succ(2,3));
}
""",
    "Leib": """
operad Leib {
    gen b:2;
    # 오른쪽 라이프니츠
    rel b(b(1,2),3) - b(b(1,3),2) - b(1,b(2,3));
}
""",
    "Zinb": """
operad Zinb {
    gen m:2;
    rel m(m(1,2),3) - m(1,m(2,3)) - m(1,m(3,2));
}
""",
    "Pois": """
operad Pois {
    gen m:2 symmetric;
    gen b:2 antisymmetric;
    rel com1: m(m(1,2),3) - m(m(2,3),1);
    rel com2: m(m(1,2),3) - m(m(3,1),2);
    rel jacobi: b(b(1,2),3) + b(b(2,3),1) + b(b(3,1),2);
    rel leibniz: b(m(1,2),3) - m(1,b(2,3)) - m(b(1,3),2);
}
""",
}


def list_builtins() -> List[str]:
    """카탈로그에 있는 내장 오퍼라드 이름 (선언 순서)"""
    return list(BUILTIN_SOURCES)


@lru_cache(maxsize=None)
def builtin(name: str) -> Presentation:
    """
    내장 오퍼라드 표현을 반환합니다.

    Args:
        name: Com, Lie, As, PreLie, Perm, Nov, Dend, Leib, Zinb, Pois 중 하나

    Raises:
        UnknownSymbolError: 알 수 없는 이름일 때
    """
    if name not in BUILTIN_SOURCES:
        raise UnknownSymbolError(
            f"알 수 없는 내장 오퍼라드입니다: {name} (가능한 이름: {', '.join(BUILTIN_SOURCES)})"
        )
    return parse(BUILTIN_SOURCES[name])


__all__ = ["BUILTIN_SOURCES", "list_builtins", "builtin"]

"""
场景执行技能

Skill: 按顺序执行 ScenarioDoc 中的指令
输入: ScenarioDoc
输出: Report（每条指令一条记录：指令回显、类型、结果、耗时）
"""

import logging
import time
from dataclasses import dataclass, field
from typing import List, Optional

import config
from errors import ScenarioError
from invariants import distinguish, self_csi_census, summarize
from oracle import run_oracle_check

from .scenario_parser import Directive, ScenarioDoc

logger = logging.getLogger(__name__)

REPORT_FORMAT = "endsum-report/1"


@dataclass
class Record:
    """
    一条指令的执行记录

    Attributes:
        directive: 指令回显（规范打印形式）
        kind: 指令类型
        result: 结果负载
        ok: 指令是否成功（oracle-check 不稳定或不一致时为 False）
        seconds: 耗时（只在开启计时时记录）
    """
    directive: str
    kind: str
    result: dict
    ok: bool = True
    seconds: Optional[float] = None

    def to_dict(self) -> dict:
        return {
            "directive": self.directive,
            "kind": self.kind,
            "result": self.result,
            "timing": None if self.seconds is None else {"seconds": round(self.seconds, 6)},
        }


@dataclass
class Report:
    """执行报告"""
    records: List[Record] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.records)

    def to_dict(self) -> dict:
        return {"format": REPORT_FORMAT, "records": [r.to_dict() for r in self.records]}


class ScenarioRunner:
    """
    场景执行器

    Example:
        runner = ScenarioRunner(depth=8)
        report = runner.run(parse_scenario(text))
        print(report.ok)
    """

    def __init__(self, depth: Optional[int] = None, timing: bool = False, parallel: Optional[bool] = None):
        """
        初始化执行器

        Args:
            depth: oracle-check 的默认截断深度（指令自带 depth 时以指令为准）
            timing: 是否记录每条指令的耗时
            parallel: 普查是否并发（默认读取配置）
        """
        self.depth = depth or config.default_depth()
        self.timing = timing
        self.parallel = parallel

    def run(self, doc: ScenarioDoc) -> Report:
        report = Report()
        for directive in doc.directives:
            logger.info("running %s", directive.render())
            started = time.perf_counter()
            try:
                result, ok = self._execute(directive)
            except ScenarioError:
                raise
            except ValueError as e:
                raise ScenarioError(str(e), directive.line, directive.column) from e
            seconds = time.perf_counter() - started if self.timing else None
            report.records.append(Record(directive.render(), directive.kind, result, ok, seconds))
            logger.info("finished %s (ok=%s)", directive.kind, ok)
        return report

    def _execute(self, directive: Directive):
        if directive.kind == "invariants":
            (space,) = directive.spaces
            summary = summarize(space, directive.primes)
            return {"space": directive.names[0], "graph": str(space), "summary": summary.to_dict()}, True

        if directive.kind == "distinguish":
            left, right = directive.spaces
            verdict = distinguish(summarize(left, directive.primes), summarize(right, directive.primes))
            return {
                "left": directive.names[0],
                "right": directive.names[1],
                **verdict.to_dict(),
            }, True

        if directive.kind == "census":
            (space,) = directive.spaces
            census = self_csi_census(space, directive.primes, parallel=self.parallel)
            return {"name": directive.names[0], **census.to_dict()}, True

        (space,) = directive.spaces
        check = run_oracle_check(space, directive.primes[0], directive.depth or self.depth)
        return check.to_dict(), check.ok


# 便捷函数
def run_scenario(doc: ScenarioDoc, depth: Optional[int] = None, timing: bool = False) -> Report:
    """
    便捷函数：执行场景

    Args:
        doc: 已展开的场景文档
        depth: oracle-check 默认深度
        timing: 是否记录耗时

    Returns:
        Report
    """
    return ScenarioRunner(depth=depth, timing=timing).run(doc)

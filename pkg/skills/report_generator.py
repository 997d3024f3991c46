"""
报告生成技能

Skill: 把执行报告渲染为终端文本或结构化 JSON
输入: Report
输出: 字符串（或写入文件）

结构化输出格式（endsum-report/1）:
    {"format": "endsum-report/1",
     "records": [{"directive": str, "kind": str, "result": {...}, "timing": null | {"seconds": float}}]}
键按字母排序、缩进 2、末尾换行；不开启计时时同一输入的输出逐字节相同。
"""

import json
from pathlib import Path
from typing import Optional

from jinja2 import Environment, FileSystemLoader

import config

from .scenario_runner import Report


def format_module(m: dict) -> str:
    """把 {"free_rank": 1, "torsion": [2]} 格式化为 Z + Z_2"""
    if m["free_rank"] is None:
        return "unavailable over Z"
    parts = []
    if m["free_rank"]:
        parts.append("Z" if m["free_rank"] == 1 else f"Z^{m['free_rank']}")
    parts.extend(f"Z_{d}" for d in m["torsion"])
    return " + ".join(parts) or "0"


class ReportGenerator:
    """
    报告生成器

    Example:
        generator = ReportGenerator()
        print(generator.render(report, "human"))
    """

    def __init__(self, template_dir: Optional[Path] = None):
        """
        初始化报告生成器

        Args:
            template_dir: 模板目录（默认 templates/）
        """
        self.template_dir = template_dir or config.TEMPLATE_DIR

        # 初始化 Jinja2 环境（纯文本，不转义）
        self.env = Environment(
            loader=FileSystemLoader(str(self.template_dir)),
            autoescape=False,
            trim_blocks=True,
            lstrip_blocks=True,
            keep_trailing_newline=True,
        )
        self.env.filters["module"] = format_module

    def render(self, report: Report, output_format: str = "human") -> str:
        if output_format == "structured":
            return self.render_structured(report)
        if output_format == "human":
            return self.render_human(report)
        raise ValueError(f"unknown output format {output_format!r}")

    def render_human(self, report: Report) -> str:
        template = self.env.get_template("report.txt")
        return template.render(records=report.to_dict()["records"], ok=report.ok)

    @staticmethod
    def render_structured(report: Report) -> str:
        return json.dumps(report.to_dict(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"

    def write(self, report: Report, output_path: Path, output_format: str = "structured") -> Path:
        """写入文件，返回文件路径"""
        output_path = Path(output_path)
        output_path.parent.mkdir(parents=True, exist_ok=True)
        output_path.write_text(self.render(report, output_format), encoding="utf-8")
        return output_path


# 便捷函数
def generate_report(report: Report, output_format: str = "human") -> str:
    """
    便捷函数：渲染报告

    Args:
        report: 执行报告
        output_format: "human" 或 "structured"

    Returns:
        渲染后的文本
    """
    return ReportGenerator().render(report, output_format)

"""
Skills 模块

场景文件的三个独立步骤：解析展开、执行、渲染报告
"""

from .report_generator import ReportGenerator, generate_report
from .scenario_parser import ScenarioDoc, ScenarioParser, decode_scenario, format_scenario, parse_scenario
from .scenario_runner import Record, Report, ScenarioRunner, run_scenario

__all__ = [
    "ReportGenerator",
    "generate_report",
    "ScenarioDoc",
    "ScenarioParser",
    "decode_scenario",
    "format_scenario",
    "parse_scenario",
    "Record",
    "Report",
    "ScenarioRunner",
    "run_scenario",
]

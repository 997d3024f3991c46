#!/usr/bin/env python3
"""
endsum - 无穷远连通和计算器

计算梯子型开流形的无穷远上同调代数，把 CSI 与 stringer sum 建模为图操作，
并提取能区分 CSI 和的真同伦不变量（无穷远上同调的挠、dim Γ_p）。

使用方法:
    python main.py --help                          # 查看帮助
    python main.py catalog                         # 列出所有流形族
    python main.py check scenarios/stringer_sums.endsum  # 只解析与展开
    python main.py run scenarios/stringer_sums.endsum    # 执行场景
    python main.py run FILE --format structured    # 输出 JSON
"""

import logging
from pathlib import Path
from typing import Optional

import typer
from rich.console import Console
from rich.logging import RichHandler
from rich.markup import escape
from rich.panel import Panel
from rich.table import Table

# 导入模块
import config
from catalog import list_manifolds
from errors import EndsumError, ScenarioError
from skills.report_generator import ReportGenerator, generate_report
from skills.scenario_parser import ScenarioDoc, decode_scenario, parse_scenario
from skills.scenario_runner import run_scenario

__version__ = "1.0.0"

# 创建 CLI 应用
app = typer.Typer(
    name="endsum",
    help="∞ endsum - 梯子型开流形的无穷远上同调与 CSI 不变量",
    add_completion=False,
)

# 诊断信息与日志只写 stderr，stdout 留给报告
console = Console()
err_console = Console(stderr=True)


def setup_logging(verbose: bool = False) -> None:
    """安装 rich 日志处理器（stderr）"""
    level = logging.DEBUG if verbose else getattr(logging, config.LOG_LEVEL, logging.WARNING)
    logging.basicConfig(
        level=level,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=err_console, show_path=False)],
        force=True,
    )


def _check_config() -> None:
    problems = config.validate_config()
    if problems:
        err_console.print(f"[red]❌ 配置有误: {'; '.join(problems)}[/red]")
        raise typer.Exit(1)


def _load(file: Path) -> ScenarioDoc:
    """读取并展开场景文件；任何诊断都以退出码 1 结束"""
    try:
        data = file.read_bytes()
    except OSError as e:
        err_console.print(f"[red]❌ 无法读取 {escape(str(file))}: {escape(str(e))}[/red]")
        raise typer.Exit(1)
    try:
        return parse_scenario(decode_scenario(data))
    except ScenarioError as e:
        err_console.print(f"[red]{escape(f'{file}:{e}')}[/red]")
        raise typer.Exit(1)


@app.command()
def run(
    file: Path = typer.Argument(..., help="场景文件"),
    output_format: str = typer.Option(config.OUTPUT_FORMAT, "--format", "-f", help="human | structured"),
    depth: Optional[int] = typer.Option(None, "--depth", "-d", min=1, help="oracle-check 初始截断深度"),
    output: Optional[Path] = typer.Option(None, "--output", "-o", help="写入文件而不是标准输出"),
    timing: bool = typer.Option(False, "--timing", help="记录每条指令的耗时"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="输出调试日志"),
):
    """
    执行场景文件中的所有指令
    """
    setup_logging(verbose)
    _check_config()
    if output_format not in config.OUTPUT_FORMATS:
        err_console.print(f"[red]❌ 未知输出格式: {output_format}（可选: {', '.join(config.OUTPUT_FORMATS)}）[/red]")
        raise typer.Exit(1)

    doc = _load(file)
    try:
        report = run_scenario(doc, depth=depth, timing=timing)
    except ScenarioError as e:
        err_console.print(f"[red]{escape(f'{file}:{e}')}[/red]")
        raise typer.Exit(1)
    except EndsumError as e:
        err_console.print(f"[red]❌ {escape(str(e))}[/red]")
        raise typer.Exit(1)

    if output:
        path = ReportGenerator().write(report, output, output_format)
        err_console.print(f"📁 已保存到: {path}")
    else:
        typer.echo(generate_report(report, output_format), nl=False)

    if not report.ok:
        raise typer.Exit(1)


@app.command()
def check(
    file: Path = typer.Argument(..., help="场景文件"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="输出调试日志"),
):
    """
    只解析并展开场景文件，列出声明的空间
    """
    setup_logging(verbose)
    doc = _load(file)

    table = Table(title="声明的空间")
    table.add_column("名称", style="cyan")
    table.add_column("空间", style="white")
    table.add_column("节点", justify="right")
    table.add_column("边", justify="right")
    table.add_column("维数", justify="right")
    table.add_column("caps", style="dim")

    for decl in doc.declarations:
        space = decl.space
        caps = ", ".join(c for node_caps in space.caps for c in node_caps)
        table.add_row(
            decl.name,
            str(space),
            str(len(space.nodes)),
            str(len(space.edges)),
            str(space.dimension),
            caps or "-",
        )

    console.print(table)
    console.print(f"\n✅ {len(doc.declarations)} 个空间，{len(doc.directives)} 条指令")


@app.command()
def catalog():
    """
    列出所有可用的流形族
    """
    families = list_manifolds()

    table = Table(title="📚 流形族")
    table.add_column("关键字", style="cyan")
    table.add_column("语法", style="green")
    table.add_column("描述", style="white")

    for family in families:
        table.add_row(family["keyword"], family["signature"], family["description"])

    console.print(table)
    console.print(f"\n共 {len(families)} 个流形族；用 # 做连通和，用 x 做乘积")


@app.command()
def version():
    """
    显示版本信息
    """
    console.print(Panel.fit(
        f"[bold]endsum[/bold] v{__version__}\n"
        "梯子型开流形的无穷远上同调与 CSI 不变量",
        title="∞ 关于",
        border_style="blue",
    ))


if __name__ == "__main__":
    app()

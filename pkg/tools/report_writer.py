"""report.json (stable field names) and a Markdown summary rendered with Jinja2."""
import json
import math
from pathlib import Path

from jinja2 import Environment, FileSystemLoader

from config.defaults import REPORT_JSON, REPORT_MARKDOWN
from controllers.barriers import node_current_bounds
from grid.parameters import GridParameters

TEMPLATE_DIR = Path(__file__).resolve().parent.parent / "templates"
_env = Environment(loader=FileSystemLoader(str(TEMPLATE_DIR)), trim_blocks=True, lstrip_blocks=True)


def node_bounds(params: GridParameters) -> list[dict]:
    out = []
    for node in params.nodes():
        tilde = node_current_bounds(node)
        out.append({"node": node.index, "v_l": node.v_l, "v_h": node.v_h, "I_l": node.I_l, "I_h": node.I_h,
                    "I_tilde_l": tilde.I_tilde_l, "I_tilde_h": tilde.I_tilde_h})
    return out


def _fmt(value) -> str:
    if value is None or (isinstance(value, float) and math.isnan(value)):
        return "never"
    return f"{value:.6g}"


def _json_safe(value):
    if isinstance(value, float) and math.isnan(value):
        return None
    if isinstance(value, dict):
        return {k: _json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_safe(v) for v in value]
    return value


def write_report(result: dict, out_dir) -> dict[str, Path]:
    """`result` is the dict built by MicrogridEngine.run_simulation."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    json_path = out_dir / REPORT_JSON
    json_path.write_text(json.dumps(_json_safe(result), indent=2) + "\n", encoding="utf-8")
    md = _env.get_template("report.md.j2").render(fmt=_fmt, **result)
    md_path = out_dir / REPORT_MARKDOWN
    md_path.write_text(md, encoding="utf-8")
    return {"json": json_path, "markdown": md_path}


def read_bounds(report_path) -> list[dict]:
    return json.loads(Path(report_path).read_text(encoding="utf-8"))["bounds"]

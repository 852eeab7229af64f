"""Exact computation of length growth along ideal powers.

The heavy lifting lives in the compiled extension `_hgl`; this package
adds small conveniences for working with the JSON reports.
"""

import json as _json

try:
    from ._hgl import (  # type: ignore[attr-defined]
        Ideal,
        Module,
        Ring,
        builtin_scenarios,
        ext_length,
        fit_values,
        h0m_length,
        power_quotient,
        run_builtin,
        run_scenario_text,
        tor_length,
        veronese_oracle,
    )
except ImportError:  # development layout: extension on PYTHONPATH
    from _hgl import (  # type: ignore[no-redef]
        Ideal,
        Module,
        Ring,
        builtin_scenarios,
        ext_length,
        fit_values,
        h0m_length,
        power_quotient,
        run_builtin,
        run_scenario_text,
        tor_length,
        veronese_oracle,
    )

__all__ = [
    "Ideal",
    "Module",
    "Ring",
    "builtin_scenarios",
    "ext_length",
    "fit_values",
    "h0m_length",
    "power_quotient",
    "run_builtin",
    "run_scenario",
    "run_scenario_text",
    "scenario_report",
    "tor_length",
    "veronese_oracle",
]

__version__ = "0.1.0"


def scenario_report(name, max_period=None):
    """Run a built-in scenario and return the report as a dict."""
    return _json.loads(run_builtin(name, max_period, "json"))


def run_scenario(text, max_period=None):
    """Run a scenario given as DSL text and return the report as a dict."""
    return _json.loads(run_scenario_text(text, max_period, "json"))

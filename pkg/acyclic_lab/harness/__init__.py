from acyclic_lab.harness.io import Manifest, load_graph, save_json, write_graph, write_manifest
from acyclic_lab.harness.suites import SUITES, CaseVerdict, SuiteReport, run_suite

__all__ = [
    "CaseVerdict",
    "Manifest",
    "SUITES",
    "SuiteReport",
    "load_graph",
    "run_suite",
    "save_json",
    "write_graph",
    "write_manifest",
]

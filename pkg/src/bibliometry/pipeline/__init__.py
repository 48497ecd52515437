from .config import (RunConfig, check_referenced_files, load_config,
                     parse_config, resolve)
from .registry import (INDICATORS, REGISTRY, MetricSpec, all_metric_ids,
                       metric_spec, selected_specs)
from .metrics import MetricsBundle, compute_metrics, read_bundle, write_bundle
from .exports import (export_all, export_chord_matrix, export_edge_list,
                      export_metric_table, export_sankey_flows,
                      export_violin_samples, write_csv)
from .runner import RunReport, StageReport, run_pipeline

__all__ = [
    "RunConfig", "check_referenced_files", "load_config", "parse_config",
    "resolve", "INDICATORS", "REGISTRY", "MetricSpec", "all_metric_ids",
    "metric_spec", "selected_specs", "MetricsBundle", "compute_metrics",
    "read_bundle", "write_bundle", "export_all", "export_chord_matrix",
    "export_edge_list", "export_metric_table", "export_sankey_flows",
    "export_violin_samples", "write_csv", "RunReport", "StageReport",
    "run_pipeline",
]

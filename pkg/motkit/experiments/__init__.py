from motkit.experiments.lemma2 import run_lemma2
from motkit.experiments.ratio import run_ratio
from motkit.experiments.report import render_report
from motkit.experiments.stability import run_stability
from motkit.experiments.variants import run_variants

__all__ = ["render_report", "run_lemma2", "run_ratio", "run_stability", "run_variants"]

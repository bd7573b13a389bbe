"""Translation-invariant wavelet-vaguelette reconstruction for periodic integration."""

import json as _json

from . import _tidfd
from ._tidfd import (
    Error,
    a_priori_alpha,
    add_white_noise,
    decimated_reconstruct,
    exact_inverse,
    filtered_reconstruct,
    frame_bounds,
    integrate,
    kappas,
    make_phantom,
    project_admissible,
    soft_threshold,
    thresholded_reconstruct,
    tikhonov,
    truncation,
)


def _runner(fn):
    def run(config=None):
        return _json.loads(fn(_json.dumps(config or {})))

    run.__name__ = fn.__name__
    run.__doc__ = "Run with a dict of ExperimentConfig fields; returns the report as a dict."
    return run


run_reconstruction = _runner(_tidfd.run_reconstruction)
run_rate_study = _runner(_tidfd.run_rate_study)
run_comparison = _runner(_tidfd.run_comparison)
run_validate_frame = _runner(_tidfd.run_validate_frame)
run_validate_filter = _runner(_tidfd.run_validate_filter)
run_probe_optimality = _runner(_tidfd.run_probe_optimality)

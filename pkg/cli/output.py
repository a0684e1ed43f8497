"""CSV and JSON writers for simulation, sweep and comparison results"""
import csv
import io
import json
import logging
import os

import numpy as np

import config
from analysis import SweepResult, TransportComparison
from dynamics import InvariantBreach, Trajectory
from utils import atomic_write_text, format_number, round_significant
from .manifest import RunManifest

logger = logging.getLogger(__name__)

TRAJECTORY_COLUMNS = ('t', 'p1', 'p2', 'p3', 'p4', 'psink', 'total', 'psink_eq10')
COUPLING_COLUMNS = ('t', 'zeta1', 'zeta2')
SWEEP_COLUMNS = ('gamma', 'efficiency')

# Rounding to 12 digits can move a flat sink series by one unit in the last place
SINK_DECREASE_SLACK = 1e-12


def _csv_text(header: tuple[str, ...], columns: list[np.ndarray]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, delimiter=',', lineterminator='\n')
    writer.writerow(header)
    for row in zip(*columns):
        writer.writerow([format_number(value) for value in row])
    return buffer.getvalue()


def write_csv(path: str, header: tuple[str, ...], columns: list[np.ndarray]):
    atomic_write_text(path, _csv_text(header, columns))


def write_trajectory_csv(path: str, traj: Trajectory):
    populations = traj.populations
    columns = [traj.times] + [populations[:, k] for k in range(5)]
    columns += [traj.total, traj.eq10_efficiency]
    write_csv(path, TRAJECTORY_COLUMNS, columns)


def write_couplings_csv(path: str, times: np.ndarray, zeta1: np.ndarray, zeta2: np.ndarray):
    write_csv(path, COUPLING_COLUMNS, [times, zeta1, zeta2])


def write_sweep_csv(path: str, result: SweepResult):
    write_csv(path, SWEEP_COLUMNS, [result.gammas, result.efficiencies])


def write_json(path: str, payload: dict):
    """Pretty JSON with insertion-ordered keys and a trailing newline"""
    atomic_write_text(path, json.dumps(payload, indent=2, ensure_ascii=False) + '\n')


def read_csv_columns(path: str) -> dict[str, np.ndarray]:
    """Parse a CSV written by this module back into float columns"""
    with open(path, 'r', encoding='utf-8', newline='') as f:
        reader = csv.reader(f)
        header = next(reader)
        rows = [[float(value) for value in row] for row in reader]
    data = np.array(rows, dtype=float).reshape(len(rows), len(header))
    return {name: data[:, k] for k, name in enumerate(header)}


def verify_trajectory_csv(path: str, tol: float = config.REPORT_TOLERANCE):
    """Re-read a trajectory CSV and check conservation and a monotone sink

    Raises:
        InvariantBreach: At the first row violating a check
    """
    columns = read_csv_columns(path)
    times, total, psink = columns['t'], columns['total'], columns['psink']

    drift = np.abs(total - 1.0)
    bad = np.nonzero(drift > tol)[0]
    if bad.size:
        k = bad[0]
        raise InvariantBreach(float(times[k]), 'trace', float(drift[k]))

    decrease = -np.diff(psink)
    bad = np.nonzero(decrease > SINK_DECREASE_SLACK)[0]
    if bad.size:
        k = bad[0] + 1
        raise InvariantBreach(float(times[k]), 'sink-monotonicity', float(decrease[k - 1]))
    logger.debug(f"Verified {path}: {len(times)} rows")


def _rounded(values: dict) -> dict:
    return {key: round_significant(value) if isinstance(value, float) else value
            for key, value in values.items()}


def _tool_block() -> dict:
    return {'name': config.TOOL_NAME, 'version': config.TOOL_VERSION}


def terminal_values(traj: Trajectory) -> dict:
    populations = traj.populations[-1]
    return _rounded({
        't': traj.t_max,
        'p1': float(populations[0]),
        'p2': float(populations[1]),
        'p3': float(populations[2]),
        'p4': float(populations[3]),
        'psink': float(populations[4]),
        'psites': float(traj.p_sites[-1]),
        'total': float(traj.total[-1]),
        'psink_eq10': float(traj.eq10_efficiency[-1]),
    })


def simulation_summary(manifest: RunManifest, traj: Trajectory, files: dict) -> dict:
    t_eval = manifest.t_eval
    efficiency = traj.value_at(traj.p_sink, t_eval) if t_eval <= traj.t_max else None
    return {
        'tool': _tool_block(),
        'parameters': _rounded(manifest.echo()),
        'terminal': terminal_values(traj),
        'efficiency_at_Teval': round_significant(efficiency),
        'invariants': _rounded(traj.diagnostics()),
        'outputs': files,
    }


def sweep_summary(manifest: RunManifest, result: SweepResult, files: dict) -> dict:
    return {
        'tool': _tool_block(),
        'parameters': _rounded(manifest.echo()),
        'scenario': result.scenario,
        'Teval': round_significant(result.t_eval),
        'grid_gamma_opt': round_significant(float(result.gammas[result.grid_argmax])),
        'grid_efficiency_max': round_significant(float(result.efficiencies[result.grid_argmax])),
        'gamma_opt': round_significant(result.gamma_opt),
        'efficiency_opt': round_significant(result.efficiency_opt),
        'bracket': [round_significant(value) for value in result.bracket],
        'outputs': files,
    }


def comparison_entry(record: TransportComparison, files: dict) -> dict:
    return {
        'scenario': record.scenario,
        'gamma_incoherent': round_significant(record.gamma),
        'gamma_source': record.gamma_source,
        'crossover_time': round_significant(record.crossover_time),
        'persistent_lead_after': round_significant(record.persistent_time),
        'terminal_coherent': round_significant(record.terminal_coherent),
        'terminal_incoherent': round_significant(record.terminal_incoherent),
        'advantage': round_significant(record.advantage),
        'verdict': record.verdict,
        'outputs': files,
    }


def comparison_summary(manifest: RunManifest, entries: list[dict]) -> dict:
    return {
        'tool': _tool_block(),
        'parameters': _rounded(manifest.echo()),
        'scenarios': entries,
    }


def output_path(manifest: RunManifest, filename: str) -> str:
    return os.path.join(manifest.out, filename)

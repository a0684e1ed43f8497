"""simulate, sweep and compare subcommands"""
import logging

import click

from analysis import compare_transport, gamma_sweep, scenario_network
from dynamics import NoiseSpec, evolve, initial_state
from netmodel import coupling_series
from utils import dedupe_preserving_order
from . import app
from .manifest import resolve_manifest
from .output import (
    comparison_entry, comparison_summary, output_path, simulation_summary,
    sweep_summary, verify_trajectory_csv, write_couplings_csv, write_json,
    write_sweep_csv, write_trajectory_csv,
)

logger = logging.getLogger(__name__)

# (flag declarations, click keyword arguments); destinations match RunManifest fields
_MANIFEST_OPTIONS = [
    (('--config', 'config_path'), dict(type=click.Path(dir_okay=False), help="Manifest document (KEY=value)")),
    (('--scenario',), dict(type=str, help="fixed, site1_osc, site4_osc, antiphase or inphase")),
    (('--configuration',), dict(type=click.Choice(['A', 'B']), help="A: coherent layout, B: J34 negative")),
    (('--gamma',), dict(type=float, help="Dephasing rate on sites 2 and 3")),
    (('--Gamma', 'sink_rate'), dict(type=float, help="Sink rate")),
    (('--amplitude',), dict(type=float, help="Deformation amplitude a")),
    (('--omega0',), dict(type=float, help="Deformation angular frequency")),
    (('--phase1',), dict(type=float, help="Phase of the (1,2)/(1,3) pair")),
    (('--phase2',), dict(type=float, help="Phase of the (2,4)/(3,4) pair")),
    (('--omega',), dict(type=float, help="Common site frequency")),
    (('--tmax', 't_max'), dict(type=float, help="Final time")),
    (('--dt', 'step'), dict(type=float, help="RK4 step")),
    (('--teval', 't_eval'), dict(type=float, help="Sweep evaluation time")),
    (('--gamma-min',), dict(type=float, help="Sweep lower bound")),
    (('--gamma-max',), dict(type=float, help="Sweep upper bound")),
    (('--points', 'n_points'), dict(type=int, help="Sweep grid size")),
    (('--scenarios',), dict(type=str, help="Comma-separated scenarios for compare")),
    (('--reoptimize-gamma',), dict(type=click.BOOL, help="Sweep gamma per scenario (true) or use 1.05 (false)")),
    (('--out',), dict(type=click.Path(file_okay=False), help="Output directory")),
]


def manifest_options(func):
    """Attach every manifest flag to a subcommand"""
    for declarations, kwargs in reversed(_MANIFEST_OPTIONS):
        func = click.option(*declarations, default=None, **kwargs)(func)
    return func


def _manifest_from(options: dict):
    config_path = options.pop('config_path', None)
    return resolve_manifest(config_path, options)


@app.command('simulate')
@manifest_options
def cmd_simulate(**options):
    """Evolve one scenario and write trajectory, couplings and summary"""
    manifest = _manifest_from(options)
    noise = NoiseSpec.uniform(manifest.gamma, manifest.sink_rate)
    network = scenario_network(
        manifest.scenario, manifest.configuration, omega=manifest.omega,
        **manifest.deformation_overrides(),
    )
    logger.info(f"🔬 simulate {manifest.scenario}/{manifest.configuration} to t={manifest.t_max} (h={manifest.step})")

    traj = evolve(network, noise, initial_state(1), manifest.t_max, manifest.step)
    zeta1, zeta2 = coupling_series(network, traj.times)

    files = {'trajectory': 'trajectory.csv', 'couplings': 'couplings.csv', 'summary': 'summary.json'}
    trajectory_path = output_path(manifest, files['trajectory'])
    write_trajectory_csv(trajectory_path, traj)
    write_couplings_csv(output_path(manifest, files['couplings']), traj.times, zeta1, zeta2)
    verify_trajectory_csv(trajectory_path)

    summary = simulation_summary(manifest, traj, files)
    write_json(output_path(manifest, files['summary']), summary)
    click.echo(f"P_sink({traj.t_max:g}) = {summary['terminal']['psink']:.6f} -> {manifest.out}")


@app.command('sweep')
@manifest_options
def cmd_sweep(**options):
    """Sweep the dephasing rate (Gamma = 2 gamma) and report gamma_opt"""
    manifest = _manifest_from(options)
    result = gamma_sweep(
        manifest.scenario, manifest.gamma_min, manifest.gamma_max, manifest.n_points,
        manifest.t_eval, manifest.step, **manifest.deformation_overrides(),
    )

    files = {'sweep': 'sweep.csv', 'summary': 'sweep.json'}
    write_sweep_csv(output_path(manifest, files['sweep']), result)
    write_json(output_path(manifest, files['summary']), sweep_summary(manifest, result, files))
    click.echo(f"gamma_opt = {result.gamma_opt:.4f} (P_sink({result.t_eval:g}) = {result.efficiency_opt:.6f})")


@app.command('compare')
@manifest_options
def cmd_compare(**options):
    """Compare coherent and optimal incoherent transport per scenario"""
    manifest = _manifest_from(options)
    names, duplicates = dedupe_preserving_order(manifest.scenarios)
    if duplicates:
        logger.warning(f"⚠️ Ignoring repeated scenarios: {', '.join(duplicates)}")
    if not names:
        raise click.UsageError("compare needs at least one scenario (--scenarios or 'scenarios=' in the manifest)")

    entries = []
    for name in names:
        record = compare_transport(
            name, manifest.t_max, manifest.step,
            reoptimize_gamma=manifest.reoptimize_gamma,
            sink_rate=manifest.sink_rate,
            t_eval=manifest.t_eval,
            gamma_min=manifest.gamma_min,
            gamma_max=manifest.gamma_max,
            n_points=manifest.n_points,
            omega=manifest.omega,
            **manifest.deformation_overrides(),
        )
        files = {'coherent': f"{name}_coherent.csv", 'incoherent': f"{name}_incoherent.csv"}
        for kind, traj in (('coherent', record.coherent), ('incoherent', record.incoherent)):
            path = output_path(manifest, files[kind])
            write_trajectory_csv(path, traj)
            verify_trajectory_csv(path)
        entries.append(comparison_entry(record, files))
        click.echo(f"{name}: {record.verdict} ({record.terminal_coherent:.4f} vs {record.terminal_incoherent:.4f})")

    write_json(output_path(manifest, 'compare.json'), comparison_summary(manifest, entries))

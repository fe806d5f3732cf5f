"""
Command line front end for the colored-partition identities and the arc ideal lab.

Commands:
- verify: check catalogue identities coefficientwise (or "all" of them).
- count: brute-force counts of F, B, A, G, b, d, D, colored, target or per-type members.
- hilbert: Hilbert functions of S/J_r and of the z-monomial quotient for G_{r,l}.
- arcs: weight-graded initial ideal of the arc ideal, compared with J_r or swept over orders.
- jets: bi-graded differential power ideal of x_1^r against b_{r,r}(m, n).

Exit status: 0 when every checked equality holds, 1 on a divergence, 2 on a usage error.

Example usage:
    python utils/arc_partitions.py verify --identity theorem_main --r 4 --order 50
    python utils/arc_partitions.py count --set F --r 2,3,4 --n 0..12
    python utils/arc_partitions.py arcs --r 3 --weight 6 --sweep --format json
"""

import logging
from functools import wraps

import click
from tqdm import tqdm

from arc_ideal_lab import (
    DEFAULT_WEIGHT_CAP,
    INDEX_DIRECTIONS,
    TIE_BREAKS,
    MonomialOrder,
    differential_power_ideal,
    initial_ideal,
    sweep,
)
from colored_partitions import TYPE_LABELS, count_F, iter_colored, target_count, type_counts
from errors import ArcPartitionsError, CountMismatchError
from identity_series import (
    BRUTE_COLORED_ORDER,
    BRUTE_PARTITION_ORDER,
    CATALOGUE,
    get_identity,
    resolve_params,
    series_Gl,
    series_S,
    verify as verify_identity,
)
from monomial_ideals import hilbert_Gl_quotient, hilbert_J
from partition_enum import count_A, count_B, count_b, count_d, count_D, count_G
from reporting import FORMATS, RunReport, __version__

logger = logging.getLogger(__name__)

COUNT_SETS = ("F", "B", "A", "G", "b", "d", "D", "colored", "target", "types")
TYPE_COMPONENTS = {"1": "S1", "2": "S2", "3a": "S3a", "3b": "S3b", "4a": "S4a", "4b": "S4b"}


class IntRangeListType(click.ParamType):
    """Reads '4', '2,3,4', '0..12' or a mix such as '0..3,7' into a sorted list of ints."""
    name = 'int_range_list'

    def convert(self, value, param, ctx):
        if isinstance(value, list):
            return value
        values = set()
        for chunk in filter(None, (c.strip() for c in str(value).split(","))):
            try:
                if ".." in chunk:
                    lo, hi = (int(v) for v in chunk.split("..", 1))
                    if lo > hi:
                        self.fail(f'{chunk} is an empty range, write it as lo..hi with lo <= hi.', param, ctx)
                    values.update(range(lo, hi + 1))
                else:
                    values.add(int(chunk))
            except ValueError:
                self.fail(f'{chunk} is not an integer or a range lo..hi.', param, ctx)
        if not values:
            self.fail(f'{value!r} does not contain any integer.', param, ctx)
        return sorted(values)


class FamilyOrderType(click.ParamType):
    """A permutation of the letters x, y, z, largest family first."""
    name = 'family_order'

    def convert(self, value, param, ctx):
        text = str(value).strip().lower()
        if sorted(text) != ["x", "y", "z"]:
            self.fail(f'{value} is not a permutation of xyz (e.g. zyx for z > y > x).', param, ctx)
        return text


INT_RANGE_LIST = IntRangeListType()
FAMILY_ORDER = FamilyOrderType()


def output_options(command):
    """--format, shared by every command; the default can come from ARC_PARTITIONS_FORMAT."""
    return click.option('--format', 'fmt', type=click.Choice(FORMATS), default="table", show_default=True,
                        envvar="ARC_PARTITIONS_FORMAT", show_envvar=True,
                        help='Output format of the report.')(command)


def order_options(command):
    command = click.option('--tie-break', type=click.Choice(TIE_BREAKS), default="revlex", show_default=True,
                           help='Tie-break among monomials of equal weight.')(command)
    command = click.option('--index-dir', type=click.Choice(INDEX_DIRECTIONS), default="higher", show_default=True,
                           help='Whether v_(i+1) > v_i (higher) or v_i > v_(i+1) (lower) inside a family.')(command)
    command = click.option('--family-order', type=FAMILY_ORDER, default="zyx", show_default=True,
                           help='Family precedence, largest first.')(command)
    return command


def cap_options(command):
    command = click.option('--force', is_flag=True, default=False,
                           help='Run above the weight cap.')(command)
    command = click.option('--weight-cap', type=click.IntRange(min=0), default=DEFAULT_WEIGHT_CAP, show_default=True,
                           envvar="ARC_PARTITIONS_WEIGHT_CAP", show_envvar=True,
                           help='Largest weight the arc lab runs without --force.')(command)
    return command


def usage_errors(command):
    """Library precondition failures become click usage errors (exit status 2)."""
    @wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except ArcPartitionsError as e:
            raise click.UsageError(str(e)) from e
    return wrapper


def emit(ctx, report: RunReport, fmt: str) -> None:
    click.echo(report.render(fmt))
    ctx.exit(report.exit_code)


def progress(ctx, iterable, **kwargs):
    return tqdm(iterable, disable=ctx.obj["quiet"], **kwargs)


def note(ctx, message: str) -> None:
    if not ctx.obj["quiet"]:
        click.echo(message, err=True)


@click.group()
@click.version_option(__version__, prog_name="arc_partitions")
@click.option('-v', '--verbose', count=True, help='-v for INFO logs, -vv for DEBUG logs (on stderr).')
@click.option('-q', '--quiet', is_flag=True, default=False, help='No progress bars or notes on stderr.')
@click.pass_context
def cli(ctx, verbose, quiet):
    """Colored partitions, q-series identities and the arc space of z^r - xy."""
    level = logging.WARNING if verbose == 0 else logging.INFO if verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    ctx.ensure_object(dict)
    ctx.obj["quiet"] = quiet


# verify

@cli.command()
@click.option('--identity', 'name', type=click.STRING, default="all", show_default=True,
              help='Catalogue name, or "all".')
@click.option('--r', 'rs', type=INT_RANGE_LIST, default="2", show_default=True, help='r, a list or a range.')
@click.option('--i', type=click.INT, default=None, help='i (defaults to r, or to 1 for kth_smallest).')
@click.option('--m', type=click.INT, default=None, help='Number of parts m.')
@click.option('--l', 'ell', type=click.INT, default=None, help='l in G_{r,l}.')
@click.option('--k', type=click.INT, default=None, help='k in the single-partition lemmas.')
@click.option('--a', type=click.INT, default=None, help='a in the q-binomial [a choose b].')
@click.option('--b', type=click.INT, default=None, help='b in the q-binomial [a choose b].')
@click.option('--order', type=click.IntRange(min=0), default=20, show_default=True, help='Truncation order N.')
@click.option('--brute-order', type=click.IntRange(min=0), default=BRUTE_PARTITION_ORDER, show_default=True,
              help='Order cap for identities checked against partition enumeration.')
@click.option('--colored-order', type=click.IntRange(min=0), default=BRUTE_COLORED_ORDER, show_default=True,
              help='Order cap for identities checked against colored-partition enumeration.')
@output_options
@click.pass_context
@usage_errors
def verify(ctx, name, rs, i, m, ell, k, a, b, order, brute_order, colored_order, fmt):
    """Compares both sides of catalogue identities up to q^N."""
    identities = CATALOGUE if name == "all" else (get_identity(name),)
    aux = {"i": i, "m": m, "l": ell, "k": k, "a": a, "b": b}
    report = RunReport("verify", {"identity": name, "r": rs, **aux, "order": order,
                                  "brute_order": brute_order, "colored_order": colored_order})
    jobs, seen = [], set()
    for identity in identities:
        for r in rs:
            params = resolve_params(identity, {"r": r, **aux})
            key = (identity.name, tuple(sorted(params.items())))
            if key not in seen:
                seen.add(key)
                jobs.append((identity, params))
    for identity, params in progress(ctx, jobs, desc="identities"):
        result = verify_identity(identity.name, params, order, brute_order, colored_order)
        divergence = None
        if result.first_divergence is not None:
            n, lhs, rhs = result.first_divergence
            divergence = f"q^{n}: {lhs} vs {rhs}"
            if result.informational:
                note(ctx, f"{identity.name} {params}: informational divergence at {divergence}")
        report.add(identity.name, result.params, result.status,
                   data={"order": result.order, "equal": result.equal, "first_divergence": divergence},
                   detail={"description": identity.description, "lhs": list(result.lhs), "rhs": list(result.rhs)})
    emit(ctx, report, fmt)


# count

def _target_pair(n):
    try:
        return target_count(n)
    except CountMismatchError as e:
        logger.error("%s", e)
        return e.enumerated, e.from_series


def _count_row(counter, ns):
    return {str(n): counter(n) for n in ns}


@cli.command()
@click.option('--set', 'family', type=click.Choice(COUNT_SETS), required=True, help='Which family to count.')
@click.option('--r', 'rs', type=INT_RANGE_LIST, default="2", show_default=True, help='r, a list or a range.')
@click.option('--i', type=click.INT, default=None, help='i for B, A, b, d, D (defaults to r).')
@click.option('--l', 'ell', type=click.IntRange(min=0), default=1, show_default=True, help='l for G.')
@click.option('--m', type=click.IntRange(min=0), default=1, show_default=True, help='Number of parts for b and d.')
@click.option('--n', 'ns', type=INT_RANGE_LIST, default="0..10", show_default=True, help='Weights n.')
@output_options
@click.pass_context
@usage_errors
def count(ctx, family, rs, i, ell, m, ns, fmt):
    """Brute-force counts over a range of n."""
    report = RunReport("count", {"set": family, "r": rs, "i": i, "l": ell, "m": m, "n": ns})
    if family == "target":
        for n in progress(ctx, ns, desc="n"):
            enumerated, from_series = _target_pair(n)
            report.add("target", {"n": n}, "pass" if enumerated == from_series else "fail",
                       data={"enumerated": enumerated, "series": from_series})
        emit(ctx, report, fmt)
    if family == "colored":
        report.add("colored", {}, "info", data=_count_row(lambda n: sum(1 for _ in iter_colored(n)), ns))
        emit(ctx, report, fmt)

    rows = []
    for r in progress(ctx, rs, desc="r"):
        ri = i if i is not None else r
        if family == "F":
            counts = _count_row(lambda n: count_F(r, n), ns)
            targets = {str(n): _target_pair(n)[1] for n in ns}
            report.add("F", {"r": r}, "pass" if counts == targets else "fail", data=counts)
            rows.append(counts)
        elif family == "B":
            report.add("B", {"r": r, "i": ri}, "info", data=_count_row(lambda n: count_B(r, ri, n), ns))
        elif family == "A":
            report.add("A", {"r": r, "i": ri}, "info", data=_count_row(lambda n: count_A(r, ri, n), ns))
        elif family == "D":
            report.add("D", {"r": r, "i": ri}, "info", data=_count_row(lambda n: count_D(r, ri, n), ns))
        elif family == "b":
            report.add("b", {"r": r, "i": ri, "m": m}, "info", data=_count_row(lambda n: count_b(r, ri, m, n), ns))
        elif family == "d":
            report.add("d", {"r": r, "i": ri, "m": m}, "info", data=_count_row(lambda n: count_d(r, ri, m, n), ns))
        elif family == "G":
            report.add("G", {"r": r, "l": ell}, "info", data=_count_row(lambda n: count_G(r, ell, n), ns))
        elif family == "types":
            top = max(ns)
            counts = type_counts(r, top)
            for label in TYPE_LABELS:
                series = series_S(TYPE_COMPONENTS[label], r, top)
                brute = {str(n): counts[label][n] for n in ns}
                expected = {str(n): series[n] for n in ns}
                report.add(f"type {label}", {"r": r}, "pass" if brute == expected else "fail", data=brute,
                           detail={"series": expected})
    if family == "F" and len(rows) > 1:
        same = all(row == rows[0] for row in rows)
        report.add("F equal across r", {"r": rs}, "pass" if same else "fail", data={"equal": same})
    emit(ctx, report, fmt)


# hilbert

@cli.command()
@click.option('--ideal', type=click.Choice(("Jr", "Gl")), required=True, help='S/J_r or the z-monomial G_{r,l} quotient.')
@click.option('--r', 'rs', type=INT_RANGE_LIST, default="2", show_default=True, help='r, a list or a range.')
@click.option('--l', 'ell', type=click.IntRange(min=0), default=1, show_default=True, help='l for Gl.')
@click.option('--order', type=click.IntRange(min=0), default=10, show_default=True, help='Largest weight N.')
@output_options
@click.pass_context
@usage_errors
def hilbert(ctx, ideal, rs, ell, order, fmt):
    """Hilbert functions of monomial quotients next to their counting oracles."""
    report = RunReport("hilbert", {"ideal": ideal, "r": rs, "l": ell, "order": order})
    for r in progress(ctx, rs, desc="r"):
        if ideal == "Jr":
            values = hilbert_J(r, order)
            oracles = {"count_F": [count_F(r, n) for n in range(order + 1)]}
            params = {"r": r}
        else:
            values = hilbert_Gl_quotient(r, ell, order)
            oracles = {"count_G": [count_G(r, ell, n) for n in range(order + 1)],
                       "series_Gl": list(series_Gl(r, ell, order).coeffs)}
            params = {"r": r, "l": ell}
        status = "pass" if all(values == oracle for oracle in oracles.values()) else "fail"
        report.add(ideal, params, status, data={str(n): v for n, v in enumerate(values)}, detail=oracles)
    emit(ctx, report, fmt)


# arcs

@cli.command()
@click.option('--r', type=click.IntRange(min=2), default=2, show_default=True, help='r in z^r - xy.')
@click.option('--weight', 'max_weight', type=click.IntRange(min=0), default=6, show_default=True,
              help='Largest weight N.')
@order_options
@click.option('--adapted/--plain', default=False, show_default=True, help='Divided-power coordinates v_j/j!.')
@click.option('--compare-j', is_flag=True, default=False, help='Compare the leading monomials with J_r.')
@click.option('--sweep', 'do_sweep', is_flag=True, default=False, help='Run every built-in order.')
@click.option('--include-lex', is_flag=True, default=False, help='With --sweep, add the lexicographic orders.')
@cap_options
@output_options
@click.pass_context
@usage_errors
def arcs(ctx, r, max_weight, family_order, index_dir, tie_break, adapted, compare_j, do_sweep, include_lex,
         weight_cap, force, fmt):
    """Initial ideal of the arc ideal of z^r - xy, weight by weight."""
    order = MonomialOrder(family_order, index_dir, tie_break)
    report = RunReport("arcs", {"r": r, "weight": max_weight, "order": order.name, "adapted": adapted,
                                "compare_j": compare_j, "sweep": do_sweep, "include_lex": include_lex})
    if do_sweep:
        for result in sweep(r, max_weight, adapted, include_lex, weight_cap=weight_cap, force=force,
                            progress=lambda it: progress(ctx, it, desc="weights", leave=False)):
            report.add(result.order, {"r": r, "adapted": adapted}, "pass" if result.hilbert_ok else "fail",
                       data={"hilbert_ok": result.hilbert_ok, "agrees_with_J": result.agrees_with_J,
                             "divergent_weights": result.divergent_weights()},
                       detail={"weights": [{"weight": w.weight, "agrees_with_J": w.agrees_with_J,
                                            "only_in_ideal": list(w.only_in_ideal), "only_in_J": list(w.only_in_J)}
                                           for w in result.weights]})
        emit(ctx, report, fmt)

    result = initial_ideal(r, max_weight, order, adapted, compare=compare_j, weight_cap=weight_cap, force=force,
                           progress=lambda it: progress(ctx, it, desc="weights"))
    for w in result.weights:
        data = {"monomials": w.monomials, "ideal_dim": w.ideal_dim, "quotient_dim": w.quotient_dim,
                "expected": w.expected}
        detail = {"leading": list(w.leading)}
        if compare_j:
            data["agrees_with_J"] = w.agrees_with_J
            detail.update(only_in_ideal=list(w.only_in_ideal), only_in_J=list(w.only_in_J))
        report.add(f"weight {w.weight}", {"n": w.weight}, "pass" if w.hilbert_ok else "fail", data=data, detail=detail)
    if compare_j and result.divergent_weights():
        note(ctx, f"leading monomials differ from J_{r} at weights {result.divergent_weights()}")
    emit(ctx, report, fmt)


# jets

@cli.command()
@click.option('--r', type=click.IntRange(min=2), default=2, show_default=True, help='r in x_1^r.')
@click.option('--weight', 'max_weight', type=click.IntRange(min=0), default=8, show_default=True,
              help='Largest weight N.')
@order_options
@cap_options
@output_options
@click.pass_context
@usage_errors
def jets(ctx, r, max_weight, family_order, index_dir, tie_break, weight_cap, force, fmt):
    """Bi-graded quotient dimensions of the differential ideal of x_1^r against b_{r,r}(m, n)."""
    order = MonomialOrder(family_order, index_dir, tie_break)
    report = RunReport("jets", {"r": r, "weight": max_weight, "order": order.name})
    result = differential_power_ideal(r, max_weight, order, weight_cap=weight_cap, force=force)
    for cell in result.cells:
        if cell.monomials == 0:
            continue
        report.add(f"n={cell.weight} m={cell.degree}", {"n": cell.weight, "m": cell.degree},
                   "pass" if cell.ok else "fail",
                   data={"monomials": cell.monomials, "quotient_dim": cell.quotient_dim, "expected": cell.expected,
                         "agrees_with_I": cell.agrees_with_I},
                   detail={"leading": list(cell.leading)})
    emit(ctx, report, fmt)


if __name__ == '__main__':
    cli()

"""
The operations a claim recipe may name. Each adapter takes plain JSON arguments (integers, lists,
strings, objects) and returns an integer, a boolean or a tuple of integers.
"""
from typing import Any, Callable, Dict, Mapping, Optional, Sequence

from k3invariants import curves, moduli, mukai, series, surfaces, wps
from k3invariants.registry.errors import UnknownOperationError


def _divisor(value: Sequence[int]) -> surfaces.HirzebruchDivisor:
    return surfaces.as_hirzebruch_divisor(value)


def _class_pair(d) -> tuple:
    return d.a, d.b


def _locus_dim(family: str, g: int, k: int = 2, h: int = 0, a: int = 0) -> int:
    return moduli.locus_dim(moduli.LocusDescriptor(moduli.LocusFamily(family), g, k, h, a))


def _extension(g1: int, k: int) -> tuple:
    record = wps.universal_extension_check(wps.extension_case(g1, k))
    return record.dimension, record.index, record.target


def _mukai_record(g1: int) -> tuple:
    r = mukai.mukai_record(g1)
    return r.dim_G, r.dim_U, r.dim_M, r.k_g, r.dim_M_prime


def _moduli_map_check(g1: int) -> tuple:
    r = mukai.moduli_map_check(g1)
    return r.source_dim, r.target_dim, r.defect


def _ic_family_check(g1: int) -> tuple:
    r = mukai.ic_family_check(g1)
    return r.ic_dim, r.kc_dim


def _difference(a: int, *rest: int) -> int:
    return a - sum(rest)


def _product(*values: int) -> int:
    result = 1
    for v in values:
        result *= v
    return result


def _floor_quotient(a: int, b: int) -> int:
    if b == 0:
        raise ValueError("Division by zero in a recipe.")
    return a // b


def _component(values: Sequence[int], index: int) -> int:
    return values[index]


OPERATIONS: Dict[str, Callable[..., Any]] = {
    # series
    'binomial': series.binomial,
    'h_proj': series.h_proj,
    'series_one_over_products': lambda weights, d: series.series_one_over_products(weights, d)[d],
    'series_ratio': lambda degrees, weights, d: series.series_ratio(degrees, weights, d)[d],
    # wps
    'section_count': lambda weights, degrees, m: wps.WeightedCompleteIntersection(weights, degrees).section_count(m),
    'canonical_weight': lambda weights, degrees: wps.WeightedCompleteIntersection(weights, degrees).canonical_weight(),
    'fano_index': lambda weights, degrees, m: wps.WeightedCompleteIntersection(weights, degrees).fano_index(m),
    'universal_extension_check': _extension,
    # curves
    'k3_curve_genus': curves.k3_curve_genus,
    'ci_curve_genus': curves.ci_curve_genus,
    'clifford_restriction': curves.clifford_restriction,
    'clifford_general': curves.clifford_general,
    'exceptional_low': curves.exceptional_low,
    'max_k_for_genus': curves.max_k_for_genus,
    'rr_h0': lambda deg, g, h1: curves.CurveInvariants(g, deg).h0(h1),
    'serre_h1': lambda deg, g, h0: curves.CurveInvariants(g, deg).h1(h0),
    'h0_nonspecial': lambda deg, g: curves.CurveInvariants(g, deg).nonspecial_h0(),
    'clifford_h0_bound': curves.clifford_h0_bound,
    'castelnuovo_genus': curves.castelnuovo_genus,
    'theta_degree': lambda g, k: curves.SpinDatum(g, k, 0).degree,
    'expected_theta_codim': curves.expected_theta_codim,
    'same_parity': curves.same_parity,
    'hyperelliptic_theta_h0': lambda g, r: curves.SpinDatum.hyperelliptic(g, r).h0,
    'hyperelliptic_theta_loci': lambda g, k, min_a=0: tuple(t.a for t in curves.hyperelliptic_theta_loci(g, k, min_a)),
    # surfaces
    'hirzebruch_intersect': lambda d1, d2: surfaces.hirzebruch_intersect(_divisor(d1), _divisor(d2)),
    'hirzebruch_canonical': lambda n: _class_pair(surfaces.hirzebruch_canonical(n)),
    'hirzebruch_h0': lambda d: surfaces.hirzebruch_h0(_divisor(d)),
    'hirzebruch_pa': lambda d: surfaces.hirzebruch_pa(_divisor(d)),
    'hirzebruch_adjoint': lambda d: _class_pair(surfaces.hirzebruch_adjoint(_divisor(d))),
    'quadric_h0': surfaces.quadric_h0,
    'quadric_pa': surfaces.quadric_pa,
    'quadric_adjoint': lambda a, b: _class_pair(surfaces.quadric_adjoint(a, b)),
    'delpezzo_h0': surfaces.delpezzo_h0,
    'delpezzo_pa': surfaces.delpezzo_pa,
    'geometric_genus': lambda pa, sing: surfaces.geometric_genus(pa, surfaces.SingularityBudget.from_mapping(sing)),
    'aut_dim': surfaces.aut_dim,
    'plane_model_genus': surfaces.plane_model_genus,
    'plane_model_degree': surfaces.plane_model_degree,
    # moduli
    'locus_dim': _locus_dim,
    'remarkable_difference': moduli.remarkable_difference,
    'theta_lower_bound': moduli.theta_lower_bound,
    'fibre_dim_ci': moduli.fibre_dim_ci,
    'ideal_sheaf_h0': moduli.ideal_sheaf_h0,
    'scenario_moduli': moduli.scenario_moduli,
    # mukai
    'mukai_record': _mukai_record,
    'mukai_n': lambda g1: mukai.mukai_record(g1).n,
    'grassmann_dim': mukai.grassmann_dim,
    'moduli_map_check': _moduli_map_check,
    'ic_family_check': _ic_family_check,
    'cork_general': mukai.cork_general,
    'ribbon_space_dim': mukai.ribbon_space_dim,
    'lines_dimension_drop': mukai.lines_dimension_drop,
    # arithmetic glue
    'sum': lambda *values: sum(values),
    'difference': _difference,
    'product': _product,
    'floor_quotient': _floor_quotient,
    'greater_than': lambda a, b: a > b,
    'collect': lambda *values: tuple(values),
    'component': _component,
}


def operation(name: str) -> Callable[..., Any]:
    """
    Returns the adapter registered under the given name.

    :param name: the operation name
    :return: the adapter
    """
    try:
        return OPERATIONS[name]
    except KeyError:
        raise UnknownOperationError(f"Unknown operation {name!r}.") from None


def evaluate(value: Any, resolved: Optional[Mapping[str, Any]] = None) -> Any:
    """
    Evaluates a recipe. Objects with an "op" key are applied to their evaluated "args" (and "kwargs");
    objects with a "ref" key are replaced by the computed value of the referenced claim; lists are
    evaluated element-wise; anything else is a literal.

    :param value: the recipe, or a literal
    :param resolved: the computed values of the claims the recipe may refer to
    :return: the evaluated value
    """
    if isinstance(value, Mapping):
        if 'ref' in value:
            ref = value['ref']
            if resolved is None or ref not in resolved:
                raise ValueError(f"Reference to unresolved claim {ref!r}.")
            if resolved[ref] is None:
                raise ValueError(f"Referenced claim {ref!r} has no computed value.")
            return resolved[ref]
        if 'op' in value:
            args = [evaluate(a, resolved) for a in value.get('args', [])]
            kwargs = {k: evaluate(v, resolved) for k, v in value.get('kwargs', {}).items()}
            return operation(value['op'])(*args, **kwargs)
        return {k: evaluate(v, resolved) for k, v in value.items()}
    if isinstance(value, list):
        return [evaluate(v, resolved) for v in value]
    return value


def recipe_operations(value: Any):
    """
    Yields every operation name a recipe uses.
    """
    if isinstance(value, Mapping):
        if 'op' in value:
            yield value['op']
        for v in value.values():
            yield from recipe_operations(v)
    elif isinstance(value, list):
        for v in value:
            yield from recipe_operations(v)


def recipe_references(value: Any):
    """
    Yields every claim id a recipe refers to.
    """
    if isinstance(value, Mapping):
        if 'ref' in value:
            yield value['ref']
        for v in value.values():
            yield from recipe_references(v)
    elif isinstance(value, list):
        for v in value:
            yield from recipe_references(v)

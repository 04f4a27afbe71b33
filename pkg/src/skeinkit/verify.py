"""Named identity suites, each returning per-identity pass/fail results."""

from __future__ import annotations

from .partitions import Hook, hooks_of, partitions_of
from .ring import (
    FormalSeries,
    RatFunc,
    V,
    V_INV,
    Z,
    brace,
    he_involution,
    quantum_int,
    series_log,
    series_mul,
)
from .skein import (
    X_elem,
    a_ij,
    a_series,
    abar_elem,
    abar_series,
    delta_phi,
    delta_phibar,
    e_in_A,
    h_in_A,
    h_in_A_series,
    h_series,
    mirror,
    theta_closed,
    turaev_A,
)
from .symfunc import (
    BasisExpansion,
    SymElement,
    complete,
    elementary,
    from_basis,
    jacobi_trudi,
    power_sum,
    schur,
    to_basis,
)

DEFAULT_MAX = {
    "aabar": 10,
    "ax": 8,
    "ambarra": 8,
    "xm": 8,
    "hfroma": 8,
    "efroma": 7,
    "ahook": 10,
    "xdelta": 8,
    "pieri": 8,
    "jacobitrudi": 7,
    "powerhopf": 6,
    "involutions": 8,
}


def _suite_aabar(max_degree):
    prod = series_mul(a_series(max_degree), abar_series(max_degree))
    yield "A(t)*Abar(t) constant term = 1", prod[0].is_one()
    for k in range(1, max_degree + 1):
        yield f"A(t)*Abar(t) coefficient of t^{k} = 0", prod[k].is_zero()


def _suite_ax(max_degree):
    log = series_log(a_series(max_degree))
    for m in range(1, max_degree + 1):
        lhs = X_elem(m) * RatFunc(Z, m)
        yield f"z X_{m}/{m} = [t^{m}] log A(t)", lhs == log[m]


def _suite_ambarra(max_degree):
    for m in range(1, max_degree + 1):
        theorem = abar_elem(m)
        rec = turaev_A(m)
        for k in range(1, m):
            rec = rec - turaev_A(k) * abar_elem(m - k) * Z
        yield f"Abar_{m} closed sum = convolution recursion", theorem == rec
        yield f"Abar_{m} = mirror(A_{m})", theorem == mirror(turaev_A(m))


def _suite_xm(max_degree):
    for m in range(1, max_degree + 1):
        yield f"X_{m} = [{m}] P_{m}", X_elem(m) == power_sum(m) * quantum_int(m)
        conv = turaev_A(m) * m
        for j in range(1, m):
            conv = conv - turaev_A(j) * abar_elem(m - j) * Z * j
        yield f"X_{m} = -z sum j A_j Abar_(m-j)", conv == X_elem(m)
        total = SymElement.zero()
        for j in range(m):
            total = total + a_ij(m - 1 - j, j)
        yield f"X_{m} = sum_j A_(m-1-j,j)", total == X_elem(m)


def _suite_hfroma(max_degree):
    for m in range(1, max_degree + 1):
        rec = h_in_A(m)
        closed = BasisExpansion(
            "A", {lam: theta_closed(lam) for lam in partitions_of(m)}
        )
        yield f"h_{m}: theta recursion = closed form", rec == closed
        yield f"h_{m}: theta recursion = series inversion", rec == h_in_A_series(m)
        yield f"h_{m}: evaluated Turaev expansion = h_{m}", from_basis(rec) == complete(m)


def _suite_efroma(max_degree):
    for m in range(1, max_degree + 1):
        exp = e_in_A(m)
        swapped = BasisExpansion(
            "A", {lam: he_involution(c) for lam, c in h_in_A(m).terms.items()}
        )
        yield f"e_{m}: tau closed form = involuted theta", exp == swapped
        yield f"e_{m}: evaluated Turaev expansion = e_{m}", from_basis(exp) == elementary(m)


def _hook_sign(hook: Hook) -> int:
    return -1 if hook.leg % 2 else 1


def _suite_ahook(max_degree):
    from .ring import LaurentPoly

    for m in range(1, max_degree + 1):
        want = BasisExpansion(
            "schur",
            {
                h.partition(): RatFunc(
                    LaurentPoly.monomial(_hook_sign(h), 0, h.arm - h.leg)
                )
                for h in hooks_of(m)
            },
        )
        yield f"A_{m} = alternating s^(a-b) hook sum", to_basis(turaev_A(m), "schur") == want
        want_p = BasisExpansion(
            "schur", {h.partition(): RatFunc(_hook_sign(h)) for h in hooks_of(m)}
        )
        yield f"P_{m} = alternating hook sum", to_basis(power_sum(m), "schur") == want_p


def _suite_xdelta(max_degree):
    for m in range(1, max_degree + 1):
        want = power_sum(m) * brace(m)
        yield f"{{{m}}} P_{m} = v delta_phi(Abar_{m})", delta_phi(abar_elem(m)) * V == want
        yield (
            f"{{{m}}} P_{m} = -v^-1 delta_phibar(A_{m})",
            delta_phibar(turaev_A(m)) * (-V_INV) == want,
        )


def _suite_pieri(max_degree):
    for i in range(1, max_degree):
        for j in range(1, max_degree + 1 - i):
            got = to_basis(complete(i) * elementary(j), "schur")
            want = BasisExpansion(
                "schur",
                {
                    Hook(i - 1, j).partition(): RatFunc(1),
                    Hook(i, j - 1).partition(): RatFunc(1),
                },
            )
            yield f"h_{i} e_{j} = Q_({i-1}|{j}) + Q_({i}|{j-1})", got == want


def _suite_jacobitrudi(max_degree):
    for m in range(1, max_degree + 1):
        for lam in partitions_of(m):
            yield f"Jacobi-Trudi = character Schur at {lam}", jacobi_trudi(lam) == schur(lam)


def _suite_powerhopf(max_degree):
    from .cabling import power_hopf_check

    for m_big in range(1, max_degree + 1):
        for n_big in range(1, max_degree + 1):
            _, _, equal = power_hopf_check(m_big, n_big)
            yield f"Delta_P{n_big}(P_{m_big}) = {{{m_big * n_big}}} cable sum", equal


def _suite_involutions(max_degree):
    for m in range(1, max_degree + 1):
        yield f"mirror^2 fixes A_{m}", mirror(mirror(turaev_A(m))) == turaev_A(m)
        swapped = BasisExpansion(
            "A", {lam: he_involution(c) for lam, c in h_in_A(m).terms.items()}
        )
        yield f"h_{m} -> e_{m} under s -> -s^-1", swapped == e_in_A(m)
        yield f"mirror fixes h_{m}", mirror(complete(m)) == complete(m)
        yield f"mirror fixes P_{m}", mirror(power_sum(m)) == power_sum(m)
        yield f"mirror sends A_{m} to Abar_{m}", mirror(turaev_A(m)) == abar_elem(m)


SUITES = {
    "aabar": _suite_aabar,
    "ax": _suite_ax,
    "ambarra": _suite_ambarra,
    "xm": _suite_xm,
    "hfroma": _suite_hfroma,
    "efroma": _suite_efroma,
    "ahook": _suite_ahook,
    "xdelta": _suite_xdelta,
    "pieri": _suite_pieri,
    "jacobitrudi": _suite_jacobitrudi,
    "powerhopf": _suite_powerhopf,
    "involutions": _suite_involutions,
}


def run_suite(name: str, max_degree: int | None = None) -> list[tuple[str, bool]]:
    """Run one named suite; results are (identity label, passed) pairs."""
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choices: {', '.join(sorted(SUITES))}")
    if max_degree is None:
        max_degree = DEFAULT_MAX[name]
    if max_degree < 1:
        raise ValueError(f"max degree must be >= 1, got {max_degree}")
    return list(SUITES[name](max_degree))

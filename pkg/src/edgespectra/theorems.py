"""Exact checkers for the spectral results on the edge Laplacian.

Every checker takes a graph and returns a :class:`Verdict`.  Precondition
failures come back as ``applicable=False`` verdicts instead of exceptions so
sweeps can aggregate them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Callable

from .graph import Bipartition, Graph, is_bipartite_bfs, kronecker_double_cover, line_graph, structural_predicates
from .linalg import IntMatrix, charpoly as _charpoly, is_nilpotent, kernel_vector
from .matrices import (
    EdgeMatrices,
    assemble,
    block_sum,
    blocks,
    cofactor_pairs,
    cofactors_constant,
    digraph_strongly_connected,
    swap_conjugation_check,
)
from .orientation import orient
from .poly import IntPoly, integer_spectrum, poly_divrem, root_multiplicity


@lru_cache(maxsize=4096)
def charpoly(a: IntMatrix) -> IntPoly:
    return _charpoly(a)


@lru_cache(maxsize=1024)
def edge_matrices(g: Graph) -> EdgeMatrices:
    """Edge matrices under the canonical orientation."""
    return assemble(orient(g))


@dataclass(frozen=True)
class SpectrumForm:
    """Spectrum as monic integer factors with multiplicities.

    Conjugate irrational or complex root pairs appear as their quadratic.
    """

    factors: tuple[tuple[IntPoly, int], ...]

    def __post_init__(self) -> None:
        for f, k in self.factors:
            if not f.is_monic() or k < 1:
                raise ValueError(f"factor {f} with multiplicity {k} is not a monic factor with k >= 1")

    @classmethod
    def of(cls, pairs) -> SpectrumForm:
        return cls(tuple((f, k) for f, k in pairs if k))

    @property
    def degree(self) -> int:
        return sum(f.degree * k for f, k in self.factors)

    def expand(self) -> IntPoly:
        out = IntPoly.constant(1)
        for f, k in self.factors:
            out = out * f**k
        return out

    def to_json(self) -> list[dict]:
        return [{"factor": f.to_json(), "multiplicity": k} for f, k in self.factors]


@dataclass
class Verdict:
    name: str
    applicable: bool
    holds: bool = False
    reason: str = ""
    witness: dict[str, Any] = field(default_factory=dict)

    @property
    def status(self) -> str:
        if not self.applicable:
            return "not_applicable"
        return "passed" if self.holds else "failed"

    def to_json(self, graph6: str = "") -> dict:
        return {
            "checker": self.name,
            "graph6": graph6,
            "applicable": self.applicable,
            "reason": self.reason,
            "holds": self.holds,
            "witness": self.witness,
        }


def _na(name: str, reason: str) -> Verdict:
    return Verdict(name, applicable=False, reason=reason)


def _poly_witness(p: IntPoly) -> dict:
    out = p.to_json()
    spec = integer_spectrum(p)
    if spec is not None:
        out["integer_spectrum"] = {str(r): k for r, k in spec.items()}
    return out


def _partition_json(b: Bipartition) -> list[list[int]]:
    return [sorted(b.left), sorted(b.right)]


def _irreducibility_gate(name: str, g: Graph) -> tuple[Verdict | None, EdgeMatrices | None]:
    s = structural_predicates(g)
    if not s.connected:
        return _na(name, "graph is disconnected"), None
    if g.m == 0:
        return _na(name, "graph has no edges"), None
    em = edge_matrices(g)
    if not digraph_strongly_connected(em.M):
        why = "cycle graph" if s.is_cycle_graph else "pendant vertex" if s.has_pendant else "reducible"
        return _na(name, f"M is reducible ({why})"), None
    return None, em


class BipartitionRecoveryError(ValueError):
    pass


def recover_bipartition_from_kernel(g: Graph, em: EdgeMatrices | None = None) -> Bipartition:
    """Rebuild a vertex 2-coloring from a null vector of D + M.

    Entries of the null vector alternate in sign along every feeding pair
    e_i -> e_j.  A positive entry on arc (s, t) puts s on one side and t on
    the other; a negative entry swaps them.
    """
    em = em or edge_matrices(g)
    x = kernel_vector(em.signless)
    if x is None:
        raise BipartitionRecoveryError("D + M is nonsingular: no null vector, graph is not bipartite")
    vals = x.numerators
    M = em.M
    for i, row in enumerate(M.rows):
        for j, v in enumerate(row):
            if v and vals[i] != -vals[j]:
                raise BipartitionRecoveryError(
                    f"sign propagation fails on {em.oriented.label(i)} -> {em.oriented.label(j)}"
                )
    if any(v == 0 for v in vals):
        raise BipartitionRecoveryError("null vector has a zero entry; M is not irreducible")
    side: dict[int, int] = {}
    for i, (s, t) in enumerate(em.oriented.directed()):
        a, b = (0, 1) if vals[i] > 0 else (1, 0)
        for vertex, color in ((s, a), (t, b)):
            if side.setdefault(vertex, color) != color:
                raise BipartitionRecoveryError(f"vertex {vertex} receives both colors")
    left = frozenset(v for v in range(g.n) if side.get(v, 0) == 0)
    bip = Bipartition(left, frozenset(range(g.n)) - left)
    if not bip.is_valid_for(g):
        raise BipartitionRecoveryError("recovered coloring leaves a monochromatic edge")
    return bip


def sign_flip(m: int) -> IntMatrix:
    """diag(I_m, -I_m)."""
    return IntMatrix.diagonal([1] * m + [-1] * m)


def check_bipartite_spectral(g: Graph) -> Verdict:
    name = "bipartite"
    gate, em = _irreducibility_gate(name, g)
    if gate:
        return gate
    phi_plus = charpoly(em.signless)
    phi_minus = charpoly(em.N)
    similar = phi_plus == phi_minus
    oracle = is_bipartite_bfs(g)
    holds = similar == (oracle is not None)
    witness: dict[str, Any] = {
        "charpoly_signless": phi_plus.to_json(),
        "charpoly_N": phi_minus.to_json(),
        "charpolys_equal": similar,
        "bfs_bipartite": oracle is not None,
    }
    if oracle is not None:
        emb = assemble(orient(g, "bipartite", bipartition=oracle))
        bd = blocks(emb)
        P = sign_flip(g.m)
        conj = P.T @ emb.signless @ P == emb.N
        zero_diag_blocks = bd.M11.is_zero() and bd.M22.is_zero()
        try:
            recovered = recover_bipartition_from_kernel(g, em)
            match = recovered.same_up_to_swap(oracle, g)
            witness["recovered_bipartition"] = _partition_json(recovered)
        except BipartitionRecoveryError as exc:
            match = False
            witness["recovery_error"] = str(exc)
        witness.update(
            bipartition=_partition_json(oracle),
            conjugation_holds=conj,
            diagonal_blocks_zero=zero_diag_blocks,
            recovery_matches=match,
        )
        holds = holds and conj and zero_diag_blocks and match
    return Verdict(name, True, holds, witness=witness)


def check_tree_spectrum(g: Graph) -> Verdict:
    name = "tree"
    s = structural_predicates(g)
    if not s.connected:
        return _na(name, "graph is disconnected")
    em = edge_matrices(g)
    phi_n, phi_d = charpoly(em.N), charpoly(em.D)
    same = phi_n == phi_d
    witness = {"charpoly_N": _poly_witness(phi_n), "charpoly_D": _poly_witness(phi_d), "is_tree": s.is_tree}
    holds = same == s.is_tree
    if s.is_tree:
        form = tree_spectrum_closed_form(g)
        witness["closed_form"] = form.to_json()
        holds = holds and form.expand() == phi_n
    return Verdict(name, True, holds, witness=witness)


def tree_spectrum_closed_form(g: Graph) -> SpectrumForm:
    """Each degree d contributes eigenvalue d - 1 with multiplicity d per vertex."""
    if not structural_predicates(g).is_tree:
        raise ValueError("graph is not a tree")
    mult: dict[int, int] = {}
    for d in g.degrees():
        mult[d - 1] = mult.get(d - 1, 0) + d
    return SpectrumForm.of((IntPoly.linear_root(r), k) for r, k in sorted(mult.items()))


def check_nilpotent_iff_forest(g: Graph) -> Verdict:
    nil = is_nilpotent(edge_matrices(g).M)
    forest = structural_predicates(g).is_forest
    return Verdict("nilpotent", True, nil == forest, witness={"nilpotent": nil, "forest": forest})


def regular_spectrum_form(g: Graph) -> SpectrumForm:
    s = structural_predicates(g)
    k = s.regular_degree
    if k is None:
        raise ValueError("graph is not regular")
    if k < 2:
        raise ValueError(f"degree {k} < 2")
    if not s.connected:
        raise ValueError("graph is disconnected")
    n, m = g.n, g.m
    c = charpoly(g.adjacency_matrix()).coeffs
    y = IntPoly.x()
    lift = y * y + (k - 1)
    # prod_i (y^2 - lambda_i y + k - 1) = sum_j c_j (y^2 + k - 1)^j y^(n - j)
    phi_y = IntPoly()
    for j, cj in enumerate(c):
        if cj:
            phi_y = phi_y + cj * lift**j * y ** (n - j)
    phi_x = phi_y.compose(IntPoly((k - 1, -1)))
    return SpectrumForm.of(
        [
            (IntPoly.linear_root(k), m - n),
            (IntPoly.linear_root(k - 2), m - n),
            (phi_x, 1),
        ]
    )


def regular_charpoly_closed_form(g: Graph) -> IntPoly:
    return regular_spectrum_form(g).expand()


def kpq_spectrum_form(p: int, q: int) -> SpectrumForm:
    if p < 1 or q < 1:
        raise ValueError(f"need p, q >= 1, got {p}, {q}")
    u = p + q - 2

    def quad(c: int) -> IntPoly:
        return IntPoly((c, -u, 1))

    return SpectrumForm.of(
        [
            (IntPoly.x(), 1),
            (IntPoly.linear_root(u), 1),
            (quad(p * q - p - q), (p - 1) * (q - 1)),
            (quad(p * (q - 1)), p - 1),
            (quad(q * (p - 1)), q - 1),
        ]
    )


def kpq_charpoly_closed_form(p: int, q: int) -> IntPoly:
    return kpq_spectrum_form(p, q).expand()


def complete_bipartite_parts(g: Graph) -> tuple[int, int] | None:
    """(p, q) with p <= q if ``g`` is K_{p,q}, else None."""
    if g.m == 0 or not structural_predicates(g).connected:
        return None
    bip = is_bipartite_bfs(g)
    if bip is None or g.m != len(bip.left) * len(bip.right):
        return None
    return tuple(sorted((len(bip.left), len(bip.right))))


def symmetric_block_spectrum_split(a: IntMatrix, b: IntMatrix) -> Verdict:
    if not (a.is_square and b.is_square and a.shape == b.shape):
        raise ValueError(f"blocks must be square of equal order, got {a.shape} and {b.shape}")
    H = IntMatrix.block([[a, b], [b, a]])
    phi_h = charpoly(H)
    plus, minus = charpoly(a + b), charpoly(a - b)
    return Verdict(
        "block-split",
        True,
        phi_h == plus * minus,
        witness={"charpoly_H": phi_h.to_json(), "charpoly_sum": plus.to_json(), "charpoly_difference": minus.to_json()},
    )


def double_cover_blocks(em: EdgeMatrices) -> tuple[IntMatrix, IntMatrix]:
    """(A', B') with [[A', B'], [B', A']] permutation-similar to N of the double cover.

    Lifting arc e_i to the two arcs leaving layer 0 and layer 1, and grouping
    the lifted inverse arcs by layer, puts N(X x K2) in this form with
    A' = D and B' = -M; the split then reads phi_N * phi_{D+M}.
    """
    return em.D, -em.M


def check_double_cover_divisibility(g: Graph) -> Verdict:
    name = "double-cover"
    if not structural_predicates(g).connected:
        return _na(name, "graph is disconnected")
    if g.m == 0:
        return _na(name, "graph has no edges")
    phi = charpoly(edge_matrices(g).N)
    cover = kronecker_double_cover(g)
    phi_cover = charpoly(edge_matrices(cover).N)
    quot, rem = poly_divrem(phi_cover, phi)
    return Verdict(
        name,
        True,
        rem.is_zero(),
        witness={
            "charpoly_N": phi.to_json(),
            "charpoly_N_cover": phi_cover.to_json(),
            "quotient": quot.to_json(),
            "remainder": rem.to_json(),
            "quotient_is_signless_charpoly": quot == charpoly(edge_matrices(g).signless),
        },
    )


def check_line_graph_identity(g: Graph) -> Verdict:
    name = "line-graph"
    if g.m == 0:
        return _na(name, "graph has no edges")
    bd = blocks(edge_matrices(g))
    n_sum, m_sum = block_sum(bd)
    L = line_graph(g)
    lap_ok = n_sum == L.laplacian_matrix()
    adj_ok = m_sum == L.adjacency_matrix()
    return Verdict(name, True, lap_ok and adj_ok, witness={"laplacian_matches": lap_ok, "adjacency_matches": adj_ok})


def check_zero_simple(g: Graph) -> Verdict:
    name = "zero-simple"
    s = structural_predicates(g)
    if not s.connected:
        return _na(name, "graph is disconnected")
    if g.m == 0:
        return _na(name, "graph has no edges")
    if s.is_cycle_graph:
        return _na(name, "cycle graph")
    if s.has_pendant:
        return _na(name, "graph has a pendant vertex")
    em = edge_matrices(g)
    mult = root_multiplicity(charpoly(em.N), 0)
    strong = digraph_strongly_connected(em.M)
    return Verdict(name, True, mult == 1 and strong, witness={"zero_multiplicity": mult, "strongly_connected": strong})


def regular_symmetry_report(g: Graph) -> dict[str, Any]:
    """All block and cofactor symmetries expected of a regular graph."""
    em = edge_matrices(g)
    bd = blocks(em)
    swap = swap_conjugation_check(em, bd)
    pairs = cofactor_pairs(2 * g.m)
    constant, value = cofactors_constant(em.N, pairs)
    return {
        "p_eq_s_transpose": swap.p_eq_s_transpose,
        "n_symmetry": swap.n_symmetry,
        "col_sums_zero": swap.col_sums_zero,
        "row_sums_zero": not any(em.N.row_sums()),
        "cofactors_constant": constant,
        "cofactor_value": None if value is None else str(value),
        "cofactor_pairs_checked": len(pairs),
        "cofactors_full": len(pairs) == (2 * g.m) ** 2,
    }


def check_regular_symmetries(g: Graph) -> Verdict:
    name = "regular-symmetries"
    k = structural_predicates(g).regular_degree
    if k is None:
        return _na(name, "graph is not regular")
    if k < 2:
        return _na(name, f"degree {k} < 2")
    w = regular_symmetry_report(g)
    holds = all(w[key] for key in ("p_eq_s_transpose", "n_symmetry", "col_sums_zero", "row_sums_zero", "cofactors_constant"))
    return Verdict(name, True, holds, witness=w)


def check_regular_spectrum(g: Graph) -> Verdict:
    name = "regular-spectrum"
    s = structural_predicates(g)
    if not s.connected:
        return _na(name, "graph is disconnected")
    if s.regular_degree is None:
        return _na(name, "graph is not regular")
    if s.regular_degree < 2:
        return _na(name, f"degree {s.regular_degree} < 2")
    closed = regular_charpoly_closed_form(g)
    direct = charpoly(edge_matrices(g).N)
    return Verdict(name, True, closed == direct, witness={"closed_form": closed.to_json(), "charpoly_N": direct.to_json()})


def check_kpq_spectrum(g: Graph) -> Verdict:
    name = "kpq-spectrum"
    parts = complete_bipartite_parts(g)
    if parts is None:
        return _na(name, "graph is not complete bipartite")
    p, q = parts
    form = kpq_spectrum_form(p, q)
    direct = charpoly(edge_matrices(g).N)
    return Verdict(
        name,
        True,
        form.expand() == direct,
        witness={"p": p, "q": q, "closed_form": form.to_json(), "charpoly_N": direct.to_json()},
    )


CHECKERS: dict[str, Callable[[Graph], Verdict]] = {
    "bipartite": check_bipartite_spectral,
    "tree": check_tree_spectrum,
    "nilpotent": check_nilpotent_iff_forest,
    "regular-spectrum": check_regular_spectrum,
    "kpq-spectrum": check_kpq_spectrum,
    "double-cover": check_double_cover_divisibility,
    "line-graph": check_line_graph_identity,
    "zero-simple": check_zero_simple,
    "regular-symmetries": check_regular_symmetries,
}


def resolve_checkers(names: list[str] | str) -> list[str]:
    if isinstance(names, str):
        names = [n for n in names.split(",") if n]
    out: list[str] = []
    for n in names:
        if n == "all":
            out.extend(CHECKERS)
        elif n in CHECKERS:
            out.append(n)
        else:
            raise KeyError(f"unknown checker {n!r}; choose from {', '.join(CHECKERS)}, all")
    return list(dict.fromkeys(out))

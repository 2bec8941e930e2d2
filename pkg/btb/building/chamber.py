import dataclasses
import itertools
from fractions import Fraction
from typing import Tuple, List, Sequence, Iterable, Union, Optional

import numpy as np

from btb.util.padic import (
    to_matrix, identity_matrix, valuation, residue, exact_det, exact_inverse, matrix_valuation,
)
from .context import PrimeContext
from .lattice import (
    LatticeClass, SingularMatrixError,
    lattice_class, standard_lattice, act_on_lattice, contains, index_exponent,
)


class InvalidFaceError(ValueError):
    pass


class InvalidChamberError(ValueError):
    pass


@dataclasses.dataclass(frozen=True, order=True)
class Face:
    """
    Codimension-1 simplex, its vertices sorted canonically.

    `type` is the label of the vertex a chamber adds to the face.
    """
    vertices: Tuple[LatticeClass, ...]
    type: int

    def __repr__(self):
        return f"Face(type={self.type}, {list(self.vertices)})"

    def to_dict(self) -> dict:
        return {"type": self.type, "vertices": [v.hnf for v in self.vertices]}


@dataclasses.dataclass(frozen=True, order=True)
class FlagChamber:
    """
    Vertices in cyclic label order, starting at the lexicographically least class.
    """
    vertices: Tuple[LatticeClass, ...]

    def __repr__(self):
        return f"FlagChamber({[v.hnf for v in self.vertices]})"

    @classmethod
    def from_vertices(
            cls,
            vertices: Iterable[LatticeClass],
            ctx: PrimeContext,
            verify: bool = True,
    ) -> "FlagChamber":
        vertices = list(vertices)
        if len(vertices) != ctx.n:
            raise InvalidChamberError(f"A chamber has {ctx.n} vertices, got {len(vertices)}")
        if sorted(v.label for v in vertices) != list(range(ctx.n)):
            raise InvalidChamberError(f"Vertex labels of a chamber must be distinct, got {vertices}")

        by_label = sorted(vertices, key=lambda v: v.label)
        if verify:
            try:
                chain_representatives(by_label, ctx, closed=True)
            except InvalidFaceError as e:
                raise InvalidChamberError(str(e))

        start = by_label.index(min(by_label))
        return cls(vertices=tuple(by_label[start:] + by_label[:start]))

    @property
    def labels(self) -> Tuple[int, ...]:
        return tuple(v.label for v in self.vertices)

    def vertex_of_label(self, label: int) -> LatticeClass:
        for v in self.vertices:
            if v.label == label:
                return v
        raise KeyError(label)

    def face(self, face_type: int) -> Face:
        """
        The face missing the vertex of label `face_type`
        """
        return Face(
            vertices=tuple(sorted(v for v in self.vertices if v.label != face_type)),
            type=face_type,
        )

    def faces(self) -> List[Face]:
        return [self.face(t) for t in range(len(self.vertices))]

    def to_dict(self) -> dict:
        return {"vertices": [v.hnf for v in self.vertices]}


def chain_representatives(
        vertices: Sequence[LatticeClass],
        ctx: PrimeContext,
        closed: bool = False,
) -> List[np.ndarray]:
    """
    Basis matrices M_0 ⊋ M_1 ⊋ ... of representatives of `vertices`, in the
    given order, each of index p in the previous one.

    With `closed`, also checks pM_0 ⊆ M_last with index p.
    Raises `InvalidFaceError` if no such chain exists.
    """
    p = ctx.p
    reps = [vertices[0].matrix]
    for vertex in vertices[1:]:
        matrix = vertex.matrix
        # largest multiple p^k L inside the previous representative
        k = -matrix_valuation(exact_inverse(reps[-1]) @ matrix, p)
        matrix = matrix * Fraction(p) ** k
        if index_exponent(reps[-1], matrix, p) != 1:
            raise InvalidFaceError(f"{vertex} does not follow {vertices[0]} in a flag")
        reps.append(matrix)

    if closed:
        bottom = reps[0] * p
        if not contains(reps[-1], bottom, p) or index_exponent(reps[-1], bottom, p) != 1:
            raise InvalidFaceError(f"{list(vertices)} does not close up to a flag")
    return reps


def _as_face(face: Union[Face, Sequence[LatticeClass]], ctx: PrimeContext) -> Face:
    if isinstance(face, Face):
        return face
    vertices = list(face)
    if len(vertices) != ctx.n - 1:
        raise InvalidFaceError(f"A face has {ctx.n - 1} vertices, got {len(vertices)}")
    labels = {v.label for v in vertices}
    if len(labels) != len(vertices):
        raise InvalidFaceError(f"Vertex labels of a face must be distinct, got {vertices}")
    missing = (set(range(ctx.n)) - labels).pop()
    return Face(vertices=tuple(sorted(vertices)), type=missing)


def _mod_p_rank(vectors: Sequence[Sequence[int]], p: int) -> int:
    if not vectors:
        return 0
    if len(vectors) == 1:
        return int(any(x % p for x in vectors[0]))
    u, v = vectors
    minors = (u[i] * v[j] - u[j] * v[i] for i, j in itertools.combinations(range(len(u)), 2))
    if any(m % p for m in minors):
        return 2
    return _mod_p_rank([u], p) or _mod_p_rank([v], p)


def chambers_containing(face: Union[Face, Sequence[LatticeClass]], ctx: PrimeContext) -> List[FlagChamber]:
    """
    The p+1 chambers containing a codimension-1 face, sorted.

    With the face vertices as a chain M_0 ⊋ ... ⊋ M_{n-2}, the missing vertex
    lies strictly between X = M_{n-2} and Y = pM_0 and X/Y is a plane over F_p.
    Each line of that plane gives one chamber.
    """
    face = _as_face(face, ctx)
    p, n = ctx.p, ctx.n

    order = sorted(face.vertices, key=lambda v: (v.label - face.type - 1) % n)
    reps = chain_representatives(order, ctx)
    x_basis, y_basis = reps[-1], reps[0] * p

    # coordinates of X/Y inside F_p^n via the basis of Y
    y_inverse = exact_inverse(y_basis)
    columns = [x_basis[:, j] for j in range(n)]
    images = []
    for column in columns:
        coords = y_inverse @ column
        images.append([residue(c * p, p, p) for c in coords])

    u_index = next((j for j in range(n) if _mod_p_rank([images[j]], p)), None)
    v_index = next(
        (j for j in range(n) if u_index is not None and _mod_p_rank([images[u_index], images[j]], p) == 2),
        None,
    )
    if u_index is None or v_index is None:
        raise InvalidFaceError(f"{face} is not a codimension-1 face")

    u, v = columns[u_index], columns[v_index]
    lines = [v] + [u + a * v for a in range(p)]

    chambers = []
    for line in lines:
        generators = np.concatenate([y_basis, line.reshape(n, 1)], axis=1)
        vertex = lattice_class(generators, ctx)
        chambers.append(FlagChamber.from_vertices(face.vertices + (vertex, ), ctx, verify=False))
    return sorted(chambers)


def standard_chamber(ctx: PrimeContext) -> FlagChamber:
    return FlagChamber.from_vertices([standard_lattice(k, ctx) for k in range(ctx.n)], ctx)


def _check_matrix(g, ctx: PrimeContext) -> np.ndarray:
    g = g if isinstance(g, np.ndarray) and g.dtype == object else to_matrix(np.asarray(g, dtype=object).tolist())
    if g.shape != (ctx.n, ctx.n):
        raise ValueError(f"Expected a {ctx.n}x{ctx.n} matrix, got shape {g.shape}")
    if exact_det(g) == 0:
        raise SingularMatrixError(f"Singular matrix {g.tolist()}")
    return g


def act(g, x: Union[LatticeClass, FlagChamber, Face], ctx: PrimeContext):
    """
    Image of a vertex, chamber or face under g in GL(n, Q_p)
    """
    g = _check_matrix(g, ctx)
    if isinstance(x, LatticeClass):
        return act_on_lattice(g, x, ctx)
    if isinstance(x, FlagChamber):
        return FlagChamber.from_vertices([act_on_lattice(g, v, ctx) for v in x.vertices], ctx, verify=False)
    if isinstance(x, Face):
        return _as_face([act_on_lattice(g, v, ctx) for v in x.vertices], ctx)
    raise TypeError(f"Can not act on {type(x).__name__}")


def pi_matrix(ctx: PrimeContext) -> np.ndarray:
    """
    Ones on the superdiagonal and p in the lower left corner, so Π L_k = L_{k+1}
    """
    n = ctx.n
    return to_matrix([
        [1 if j == i + 1 else (ctx.p if (i, j) == (n - 1, 0) else 0) for j in range(n)]
        for i in range(n)
    ])


def affine_generator_matrices(ctx: PrimeContext) -> List[np.ndarray]:
    """
    s_0, ..., s_{n-1}: s_i swaps the coordinates i-1 and i, s_0 = Π s_1 Π^-1
    """
    n = ctx.n
    swaps = []
    for i in range(1, n):
        m = identity_matrix(n)
        m[[i - 1, i]] = m[[i, i - 1]]
        swaps.append(m)
    pi = pi_matrix(ctx)
    s_0 = pi @ swaps[0] @ exact_inverse(pi)
    return [s_0] + swaps


def generator_face_type(s: int, ctx: PrimeContext) -> int:
    """
    Type of the face of the standard chamber fixed by s_i
    """
    return (-s) % ctx.n


def word_matrix(word: Sequence[int], ctx: PrimeContext) -> np.ndarray:
    generators = affine_generator_matrices(ctx)
    matrix = identity_matrix(ctx.n)
    for s in word:
        if not 0 <= s < ctx.n:
            raise ValueError(f"Unknown affine generator s_{s}")
        matrix = matrix @ generators[s]
    return matrix


def weyl_to_chamber(word: Sequence[int], ctx: PrimeContext) -> FlagChamber:
    """
    w C_0 for the affine Weyl group element given by `word`
    """
    return act(word_matrix(word, ctx), standard_chamber(ctx), ctx)


def _signature(permutation: Sequence[int]) -> int:
    inversions = sum(
        1 for i, j in itertools.combinations(range(len(permutation)), 2)
        if permutation[i] > permutation[j]
    )
    return -1 if inversions % 2 else 1


def epsilon(g, ctx: PrimeContext, chamber: Optional[FlagChamber] = None) -> Tuple[int, int]:
    """
    The character ε(g), computed as the signature of the label permutation
    on a chamber and as (-1)^((n-1) v_p(det g)).
    """
    g = _check_matrix(g, ctx)
    chamber = chamber or standard_chamber(ctx)
    permutation = [
        act_on_lattice(g, chamber.vertex_of_label(label), ctx).label
        for label in range(ctx.n)
    ]
    by_labels = _signature(permutation)
    by_determinant = -1 if ((ctx.n - 1) * valuation(exact_det(g), ctx.p)) % 2 else 1
    return by_labels, by_determinant


def is_in_standard_iwahori(g, p: int) -> bool:
    """
    Integral, invertible mod p and upper triangular mod p
    """
    g = to_matrix(np.asarray(g, dtype=object).tolist())
    n = g.shape[0]
    if matrix_valuation(g, p) < 0:
        return False
    if valuation(exact_det(g), p) != 0:
        return False
    return all(valuation(g[i, j], p) >= 1 for i in range(n) for j in range(i))


def adjacent_vertices(lattice: LatticeClass, ctx: PrimeContext) -> List[LatticeClass]:
    """
    The p+1 neighbours of a vertex of the tree (n = 2)
    """
    if ctx.n != 2:
        raise ValueError("adjacent_vertices is defined for the tree, n = 2")
    return sorted(
        next(v for v in chamber.vertices if v != lattice)
        for chamber in chambers_containing([lattice], ctx)
    )

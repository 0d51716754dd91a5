from dataclasses import dataclass

from k3invariants.curves.genus import castelnuovo_genus
from k3invariants.curves.riemann_roch import h0_nonspecial, rr_h0, serre_h1
from k3invariants.curves.theta import hyperelliptic_theta_h0, theta_degree


@dataclass(frozen=True)
class CurveInvariants:
    """
    The numerical data of a curve together with a fixed line bundle or embedding.

    Attributes
    ----------
    genus : int
        the genus of the curve
    degree : int
        the degree of the line bundle, or of the embedded curve
    ambient_dim : int
        the dimension of the projective space the curve is mapped to
    """
    genus: int
    degree: int
    ambient_dim: int = 1

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError(f"Genus must be non-negative, got {self.genus}.")
        if self.degree < 1:
            raise ValueError(f"Degree must be positive, got {self.degree}.")
        if self.ambient_dim < 1:
            raise ValueError(f"Ambient dimension must be positive, got {self.ambient_dim}.")

    def h0(self, h1: int = 0) -> int:
        """
        Returns h^0 of the line bundle by Riemann-Roch, given its h^1.
        """
        return rr_h0(self.degree, self.genus, h1)

    def h1(self, h0: int) -> int:
        return serre_h1(self.degree, self.genus, h0)

    def nonspecial_h0(self) -> int:
        return h0_nonspecial(self.degree, self.genus)

    def castelnuovo_bound(self) -> int:
        """
        Returns the largest genus a non-degenerate curve of this degree in P^ambient_dim can have.
        """
        return castelnuovo_genus(self.degree, self.ambient_dim)

    def within_castelnuovo(self) -> bool:
        return self.genus <= self.castelnuovo_bound()


@dataclass(frozen=True)
class SpinDatum:
    """
    A k-th root θ of the canonical bundle of a genus g curve, kθ = K_C, recorded through its
    number of sections.

    Attributes
    ----------
    g : int
        the genus of the curve
    k : int
        the root order, at least 2
    h0 : int
        h^0(θ)
    """
    g: int
    k: int
    h0: int

    def __post_init__(self):
        if self.k < 2:
            raise ValueError(f"Root order must be at least 2, got {self.k}.")
        if (2 * self.g - 2) % self.k != 0:
            raise ValueError(f"Root order {self.k} does not divide 2g - 2 = {2 * self.g - 2}.")
        if self.h0 < 0:
            raise ValueError(f"h0 must be non-negative, got {self.h0}.")

    @property
    def degree(self) -> int:
        return theta_degree(self.g, self.k)

    @property
    def h1(self) -> int:
        # equals h0 for a theta characteristic
        return serre_h1(self.degree, self.g, self.h0)

    @staticmethod
    def hyperelliptic(g: int, r: int) -> 'SpinDatum':
        """
        The root θ = ((g - 1) / r) ι of order 2r on a hyperelliptic curve of genus g, ι being the
        hyperelliptic pencil.
        """
        return SpinDatum(g, 2 * r, hyperelliptic_theta_h0(g, r))

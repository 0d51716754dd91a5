from typing import Union


class HirzebruchDivisor:
    """
    A divisor class a C_0 + b f on the Hirzebruch surface F_n, where C_0 is the negative section,
    with C_0^2 = -n, and f is the class of a fibre.

    The intersection form is C_0^2 = -n, C_0 . f = 1, f^2 = 0 and the canonical class is
    -2 C_0 - (n + 2) f. Classes on different surfaces cannot be combined.

    Attributes
    ----------
    a : int
        the coefficient of the section class C_0
    b : int
        the coefficient of the fibre class f
    n : int
        the index of the surface F_n

    Examples
    --------
    The hyperplane class of the cubic scroll in P^4 and its quadruple::

        from k3invariants.surfaces import HirzebruchDivisor
        h = HirzebruchDivisor(1, 2, 1)
        h.intersect(h)      # 3
        (4 * h).h0()        # 35
        (4 * h).pa()        # 15
        (4 * h).adjoint()   # HirzebruchDivisor(2, 5, n=1), that is 2H + f

    """
    a: int
    b: int
    n: int

    def __init__(self, a: int, b: int, n: int):
        """
        Initializes the class a C_0 + b f on F_n.

        :param a: the coefficient of C_0
        :param b: the coefficient of f
        :param n: the index of the Hirzebruch surface, non-negative
        """
        if n < 0:
            raise ValueError(f"Hirzebruch surfaces F_n need n >= 0, got {n}.")
        self.a = a
        self.b = b
        self.n = n

    @staticmethod
    def section(n: int) -> 'HirzebruchDivisor':
        return HirzebruchDivisor(1, 0, n)

    @staticmethod
    def fibre(n: int) -> 'HirzebruchDivisor':
        return HirzebruchDivisor(0, 1, n)

    @staticmethod
    def canonical(n: int) -> 'HirzebruchDivisor':
        """
        Returns the canonical class -2 C_0 - (n + 2) f of F_n.

        :param n: the index of the Hirzebruch surface
        :return: the canonical class
        """
        return HirzebruchDivisor(-2, -(n + 2), n)

    def intersect(self, other: 'HirzebruchDivisor') -> int:
        """
        Returns the intersection number with another class on the same surface.

        :param other: a class on the same F_n
        :return: a1 a2 (-n) + a1 b2 + a2 b1
        """
        self._check_same_surface(other)
        return -self.n * self.a * other.a + self.a * other.b + other.a * self.b

    def self_intersection(self) -> int:
        return self.intersect(self)

    def h0(self) -> int:
        """
        Returns the number of sections of O(a C_0 + b f), the count of lattice points
        (i, j) with 0 <= i <= a and 0 <= j <= b - i n.

        :return: the number of sections, 0 when a < 0
        """
        if self.a < 0:
            return 0
        return sum(max(0, self.b - i * self.n + 1) for i in range(self.a + 1))

    def adjoint(self) -> 'HirzebruchDivisor':
        """
        Returns the adjoint class D + K.

        :return: the adjoint class
        """
        return self + HirzebruchDivisor.canonical(self.n)

    def pa(self) -> int:
        """
        Returns the arithmetic genus 1 + D . (D + K) / 2 of the curves in the class.

        :return: the arithmetic genus
        """
        return 1 + self.intersect(self.adjoint()) // 2

    def __add__(self, other: 'HirzebruchDivisor') -> 'HirzebruchDivisor':
        self._check_same_surface(other)
        return HirzebruchDivisor(self.a + other.a, self.b + other.b, self.n)

    def __sub__(self, other: 'HirzebruchDivisor') -> 'HirzebruchDivisor':
        self._check_same_surface(other)
        return HirzebruchDivisor(self.a - other.a, self.b - other.b, self.n)

    def __neg__(self) -> 'HirzebruchDivisor':
        return HirzebruchDivisor(-self.a, -self.b, self.n)

    def __mul__(self, scalar: int) -> 'HirzebruchDivisor':
        return HirzebruchDivisor(scalar * self.a, scalar * self.b, self.n)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, HirzebruchDivisor) and (self.a, self.b, self.n) == (other.a, other.b, other.n)

    def __hash__(self):
        return hash((self.a, self.b, self.n))

    def __repr__(self):
        return f"HirzebruchDivisor({self.a}, {self.b}, n={self.n})"

    def _check_same_surface(self, other: 'HirzebruchDivisor'):
        if self.n != other.n:
            raise ValueError(f"Cannot combine a class on F_{self.n} with a class on F_{other.n}.")


def hirzebruch_intersect(d1: HirzebruchDivisor, d2: HirzebruchDivisor) -> int:
    return d1.intersect(d2)


def hirzebruch_canonical(n: int) -> HirzebruchDivisor:
    return HirzebruchDivisor.canonical(n)


def hirzebruch_h0(d: HirzebruchDivisor) -> int:
    return d.h0()


def hirzebruch_pa(d: HirzebruchDivisor) -> int:
    return d.pa()


def hirzebruch_adjoint(d: HirzebruchDivisor) -> HirzebruchDivisor:
    return d.adjoint()


def as_hirzebruch_divisor(value: Union[HirzebruchDivisor, tuple, list]) -> HirzebruchDivisor:
    """
    Reads a class given either as a divisor or as a triple (a, b, n).
    """
    if isinstance(value, HirzebruchDivisor):
        return value
    a, b, n = value
    return HirzebruchDivisor(a, b, n)

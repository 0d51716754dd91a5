from dataclasses import dataclass


@dataclass(frozen=True)
class QuadricDivisor:
    """
    A class of bidegree (a, b) on the smooth quadric P^1 x P^1.
    Its intersection form is (a, b) . (a', b') = a b' + a' b and its canonical class is (-2, -2).
    """
    a: int
    b: int

    @staticmethod
    def canonical() -> 'QuadricDivisor':
        return QuadricDivisor(-2, -2)

    def intersect(self, other: 'QuadricDivisor') -> int:
        return self.a * other.b + other.a * self.b

    def adjoint(self) -> 'QuadricDivisor':
        return QuadricDivisor(self.a - 2, self.b - 2)

    def h0(self) -> int:
        return quadric_h0(self.a, self.b)

    def pa(self) -> int:
        return quadric_pa(self.a, self.b)


def quadric_h0(a: int, b: int) -> int:
    """
    Returns (a + 1)(b + 1), the number of sections of O(a, b), or 0 if a or b is negative.
    """
    if a < 0 or b < 0:
        return 0
    return (a + 1) * (b + 1)


def quadric_pa(a: int, b: int) -> int:
    """
    Returns (a - 1)(b - 1), the arithmetic genus of the curves of bidegree (a, b).
    """
    return (a - 1) * (b - 1)


def quadric_canonical() -> QuadricDivisor:
    return QuadricDivisor.canonical()


def quadric_adjoint(a: int, b: int) -> QuadricDivisor:
    return QuadricDivisor(a, b).adjoint()

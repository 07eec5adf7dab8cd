# coding: utf-8
"""
Cost Functions
==============

A cost function maps a number of resources (or jobs) to a cost.
Each server owns three of them: the reservation cost *f_R*,
the violation cost *f_V* and the transfer cost *f_T*.

Three kinds are available:

- ``power``: *c·x^p*,
- ``log-affine``: *ln((x + a) / b)*,
- ``table``: explicit values for *x = 1, 2, …*.

Whatever the kind, the cost of a non-positive quantity is zero:

.. doctest:: cost_demo

    >>> from netreserve.cost import CostFn

    >>> f = CostFn.from_value({"kind": "power", "params": {"c": 0.5, "p": 2}})
    >>> f
    <PowerCost(c=0.5, p=2)>
    >>> f(4), f(0), f(-3)
    (8.0, 0.0, 0.0)

    >>> g = CostFn.from_value({"kind": "log-affine", "params": {"a": 1, "b": 2}})
    >>> g(1), g(0)
    (0.0, 0.0)

.. note::

   The cost at *x = 0* is clamped to zero too. With the affine-log kind,
   *ln((0 + 1) / 2)* would be negative, which contradicts the positivity
   of the cost functions; values for *x ≥ 1* are not affected.
"""
import math

#: Registry of the cost function kinds: ``kind -> class``.
KINDS = {}


def register(kind):
    def decorator(cls):
        cls.kind = kind
        KINDS[kind] = cls
        return cls

    return decorator


class CostFn(object):
    """
    Base class of the cost functions.

    Subclasses implement :meth:`evaluate` for positive quantities.
    """

    kind = None

    #: Names of the parameters, in the order used for the representation.
    param_names = ()

    def __call__(self, x):
        if x <= 0:
            return 0.0
        return self.evaluate(x)

    def __repr__(self):
        cls = self.__class__.__name__
        params = ", ".join("{0}={1!r}".format(name, getattr(self, name)) for name in self.param_names)
        return "<{cls}({params})>".format(cls=cls, params=params)

    def __eq__(self, other):
        if type(other) is type(self):
            return self.to_value() == other.to_value()
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.kind, repr(self)))

    def evaluate(self, x):
        """
        Evaluate the cost of a positive quantity.

        :param int x: positive quantity.
        :rtype: float
        """
        raise NotImplementedError

    def is_nondecreasing(self, upto):
        """
        Check that the function is nondecreasing on the integer grid ``0..upto``.

        :param int upto: largest quantity to check.
        """
        values = [self(x) for x in range(upto + 1)]
        return all(v1 <= v2 for v1, v2 in zip(values, values[1:]))

    def to_value(self):
        """ Convert to a JSON-like mapping (the inverse of :meth:`from_value`). """
        return {"kind": self.kind, "params": {name: getattr(self, name) for name in self.param_names}}

    @classmethod
    def from_value(cls, value):
        """
        Convert a mapping ``{"kind": ..., "params": {...}}`` to a cost function.

        :param value: mapping or :class:`~netreserve.cost.CostFn` instance.

        :return: Newly created object.

        :raises TypeError:
            if the value is neither a mapping nor a cost function.

        :raises ValueError:
            if the kind is unknown or the parameters are invalid.
        """
        if isinstance(value, CostFn):
            return value
        if not isinstance(value, dict):
            raise TypeError(repr(type(value)))
        kind = value.get("kind")
        if kind not in KINDS:
            raise ValueError("unknown cost function kind: {0!r}".format(kind))
        params = value.get("params") or {}
        try:
            return KINDS[kind](**params)
        except TypeError:
            raise ValueError("invalid parameters for {0!r}: {1!r}".format(kind, params))


@register("power")
class PowerCost(CostFn):
    """
    Power cost: *c·x^p*.

    With *c > 0* and *p ≥ 1*, the function is nondecreasing on *x ≥ 0*.
    """

    param_names = ("c", "p")

    def __init__(self, c=1.0, p=1.0):
        self.c = c
        self.p = p

    def evaluate(self, x):
        return float(self.c * x ** self.p)


@register("log-affine")
class LogAffineCost(CostFn):
    """
    Logarithmic cost: *ln((x + a) / b)*.
    """

    param_names = ("a", "b")

    def __init__(self, a=1.0, b=1.0):
        if b <= 0:
            raise ValueError("b must be positive: {0!r}".format(b))
        self.a = a
        self.b = b

    def evaluate(self, x):
        return math.log(float(x + self.a) / self.b)


@register("table")
class TableCost(CostFn):
    """
    Tabulated cost: *values[x - 1]* for *x = 1, 2, …, len(values)*.

    .. doctest:: cost_demo

        >>> from netreserve.cost import TableCost

        >>> f = TableCost([1, 2.5])
        >>> f(1), f(2)
        (1.0, 2.5)
        >>> f(3)
        Traceback (most recent call last):
            ...
        ValueError: 3
    """

    param_names = ("values",)

    def __init__(self, values=()):
        self.values = [float(value) for value in values]

    def evaluate(self, x):
        if x > len(self.values):
            raise ValueError(x)
        return self.values[x - 1]

    @property
    def size(self):
        return len(self.values)


def zero_cost():
    """ Cost function which is zero everywhere. """
    return PowerCost(c=0.0, p=1.0)

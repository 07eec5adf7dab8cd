# coding: utf-8
"""
Reservations
============

A :class:`~netreserve.reservation.Reservation` is the vector of resources
reserved at each server: the *n*-th value is in *{1, …, m_n}*, where *m_n*
is the capacity of the *n*-th server.

Job requests use the same structure (see :data:`JobRequest`).

Usage:

.. doctest:: reservation_demo

    >>> from netreserve.reservation import Reservation

    >>> a = Reservation(3, 2)
    >>> a
    Reservation(3, 2)
    >>> str(a)
    '(3, 2)'
    >>> len(a), a[0], a[1]
    (2, 3, 2)

You can compute the deficit and the surplus of a reservation with respect
to a job request:

.. doctest:: reservation_demo

    >>> b = Reservation(5, 1)
    >>> a.deficit(b)
    (2, 0)
    >>> a.surplus(b)
    (0, 1)
"""
import numbers


class Reservation(tuple):
    """
    Vector of reserved resources (or of requested jobs), one value per server.
    """
    __slots__ = ()

    def __new__(cls, *values):
        return super(Reservation, cls).__new__(cls, values)

    def __repr__(self):
        return "Reservation({0})".format(", ".join(map(str, self)))

    def __str__(self):
        return "(" + ", ".join(map(str, self)) + ")"

    def __getnewargs__(self):
        return tuple(self)

    def deficit(self, request):
        """
        Componentwise positive part of *request - self*: jobs which cannot be served locally.

        :param request: job request, a tuple of integers.

        :rtype: tuple[int]
        """
        return tuple(max(b - a, 0) for a, b in zip(self, request))

    def surplus(self, request):
        """
        Componentwise positive part of *self - request*: unused reserved resources.

        :param request: job request, a tuple of integers.

        :rtype: tuple[int]
        """
        return tuple(max(a - b, 0) for a, b in zip(self, request))

    def dominates(self, request):
        """ ``True`` if every reserved value is at least the requested one. """
        return all(a >= b for a, b in zip(self, request))

    @classmethod
    def from_value(cls, value):
        """
        Convert a sequence of integers to a :class:`~netreserve.reservation.Reservation`.

        :param value: sequence of integers or :class:`~netreserve.reservation.Reservation`.

        :return: Newly created object.

        :raises TypeError:
            if the value is not a sequence of integers.
        """
        value_type = type(value)
        if value_type is cls:
            return value
        if value_type in (tuple, list):
            values = tuple(value)
            if values and all(isinstance(item, numbers.Integral) and not isinstance(item, bool) for item in values):
                return cls(*map(int, values))
        elif hasattr(value, "tolist"):
            # numpy arrays
            return cls.from_value(list(value.tolist()))
        raise TypeError(repr(value))


#: Job requests share the structure of the reservations.
JobRequest = Reservation

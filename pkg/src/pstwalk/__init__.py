"""Perfect state transfer in association schemes and distance-regular graphs.

Submodules: ``numerics``, ``graph``, ``scheme``, ``drg``, ``pst``, ``catalog``, ``cli``.
"""

__version__ = "0.1.0"

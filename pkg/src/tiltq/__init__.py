"""Exact models of a regular tilting block of quantum sl2 at a root of unity.

Subpackages cover three interlocking descriptions plus the glue between them:

- ``scalars``: Laurent polynomials and the cyclotomic field Q(q);
- ``uqweyl``: explicit Weyl-module matrices and brute-force structure checks;
- ``alcove``: affine Weyl group combinatorics on weights;
- ``quiver``: the zigzag-with-dead-end path algebras Q_m / Q_oo, their graded
  modules, the translation endofunctors U_i and the wall functors;
- ``tiltcat``: the matrix category of shifted indecomposable tiltings with the
  through-the-wall functors and K_0 shadows;
- ``soergel``: the two-color marked diagram calculus with its evaluation into
  the quiver model;
- ``endofun``: the diagrammatic model of projective endofunctors;
- ``cli``: the command-line front end and the verification umbrella.
"""

__version__ = "0.1.0"

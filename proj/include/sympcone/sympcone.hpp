#ifndef SYMPCONE_SYMPCONE_HPP
#define SYMPCONE_SYMPCONE_HPP

// Exact-arithmetic symplectic linear algebra: the nilpotent cone and its
// flag fibration, flag recovery from n^2-dimensional subspaces, and the
// spectral-curve discriminant machinery, all over Q with zero tolerance.

#include "charpoly.hpp"
#include "matrix.hpp"
#include "multipoly.hpp"
#include "nilpotent.hpp"
#include "polynomial.hpp"
#include "quotient.hpp"
#include "rational.hpp"
#include "rng.hpp"
#include "spectral.hpp"
#include "subspace.hpp"
#include "suites.hpp"
#include "symplectic.hpp"

#endif

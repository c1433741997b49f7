#pragma once

// Exact Sylvester double sums for polynomials with multiple roots,
// generalized Vandermonde determinants, multivariate symmetric Hermite
// interpolation, and subresultants, with the identities tying them together
// machine-checkable over the rationals.

#include "sylv/combinatorics.hpp"
#include "sylv/double_sums.hpp"
#include "sylv/errors.hpp"
#include "sylv/hermite.hpp"
#include "sylv/io.hpp"
#include "sylv/matrix.hpp"
#include "sylv/multipoly.hpp"
#include "sylv/rational.hpp"
#include "sylv/roots.hpp"
#include "sylv/subresultants.hpp"
#include "sylv/unipoly.hpp"
#include "sylv/vandermonde.hpp"
#include "sylv/verify.hpp"

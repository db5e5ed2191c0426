#pragma once

// Umbrella header: set families and VC dimension, GF(2) linear algebra,
// multilinear polynomials, deglex standard monomials, the uniform rank
// certificate pipeline, theorem bound checks, and extremal search.

#include "bit_matrix.hpp"
#include "bits.hpp"
#include "clp_pipeline.hpp"
#include "deglex.hpp"
#include "extremal_search.hpp"
#include "family_io.hpp"
#include "multilinear.hpp"
#include "poly_io.hpp"
#include "set_family.hpp"
#include "standard_basis.hpp"
#include "theorem_bounds.hpp"

#ifndef GORFAM_GORFAM_HPP
#define GORFAM_GORFAM_HPP

// Exact computation of dimensions, strata and free resolutions for families
// of graded Gorenstein quotients obtained from regular sections over a
// codimension-two Cohen-Macaulay base, driven entirely by Betti degrees.

#include <gorfam/codim2.hpp>
#include <gorfam/dim_expr.hpp>
#include <gorfam/errors.hpp>
#include <gorfam/family.hpp>
#include <gorfam/free_module.hpp>
#include <gorfam/job.hpp>
#include <gorfam/numeric.hpp>
#include <gorfam/resolution.hpp>
#include <gorfam/series.hpp>

#endif  // GORFAM_GORFAM_HPP

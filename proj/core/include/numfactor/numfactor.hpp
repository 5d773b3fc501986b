#pragma once

// Umbrella header: factorization invariants of numerical monoids.

#include "numfactor/catenary.hpp"
#include "numfactor/errors.hpp"
#include "numfactor/factorization.hpp"
#include "numfactor/monoid.hpp"
#include "numfactor/periodicity.hpp"
#include "numfactor/presentation.hpp"
#include "numfactor/rational.hpp"
#include "numfactor/tame.hpp"

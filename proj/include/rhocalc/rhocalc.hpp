#pragma once

// Umbrella header for the whole library.

#include "rhocalc/asymfunc.hpp"
#include "rhocalc/asymvec.hpp"
#include "rhocalc/calculus.hpp"
#include "rhocalc/complex.hpp"
#include "rhocalc/config.hpp"
#include "rhocalc/domain.hpp"
#include "rhocalc/dsl.hpp"
#include "rhocalc/error.hpp"
#include "rhocalc/exponent.hpp"
#include "rhocalc/expr.hpp"
#include "rhocalc/primitives.hpp"
#include "rhocalc/scalar.hpp"
#include "rhocalc/series_io.hpp"
#include "rhocalc/suites.hpp"

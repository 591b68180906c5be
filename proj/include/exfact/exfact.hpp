#ifndef EXFACT_EXFACT_HPP
#define EXFACT_EXFACT_HPP

// Umbrella header: the whole engine.

#include "exfact/charpoly.hpp"
#include "exfact/cli.hpp"
#include "exfact/diagnose.hpp"
#include "exfact/errors.hpp"
#include "exfact/factorize.hpp"
#include "exfact/linalg.hpp"
#include "exfact/matrix.hpp"
#include "exfact/matrix_io.hpp"
#include "exfact/numeric.hpp"
#include "exfact/quadratic.hpp"
#include "exfact/radical.hpp"
#include "exfact/rational.hpp"
#include "exfact/render.hpp"
#include "exfact/scalar.hpp"
#include "exfact/spectrum.hpp"
#include "exfact/trace.hpp"

#endif  // EXFACT_EXFACT_HPP

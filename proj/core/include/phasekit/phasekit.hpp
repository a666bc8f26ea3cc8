#pragma once

#include "phasekit/dynamics.hpp"
#include "phasekit/errors.hpp"
#include "phasekit/fock.hpp"
#include "phasekit/gegenbauer.hpp"
#include "phasekit/legacy.hpp"
#include "phasekit/matrix.hpp"
#include "phasekit/matrix_io.hpp"
#include "phasekit/observables.hpp"
#include "phasekit/phase_operators.hpp"
#include "phasekit/phase_states.hpp"
#include "phasekit/quadrature.hpp"
#include "phasekit/rational.hpp"
#include "phasekit/tridiagonal.hpp"
#include "phasekit/verify.hpp"

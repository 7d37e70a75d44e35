#pragma once

#include "spinfid/commands.hpp"
#include "spinfid/density_matrix.hpp"
#include "spinfid/fidelity.hpp"
#include "spinfid/kinematics.hpp"
#include "spinfid/moments.hpp"
#include "spinfid/oracle.hpp"
#include "spinfid/quadrature.hpp"
#include "spinfid/scenario.hpp"
#include "spinfid/verification.hpp"

#pragma once

#include "eii/binary_polynomial.hpp"
#include "eii/eii_code.hpp"
#include "eii/epc.hpp"
#include "eii/errmode.hpp"
#include "eii/error.hpp"
#include "eii/field.hpp"
#include "eii/grid.hpp"
#include "eii/layout.hpp"
#include "eii/matrix.hpp"
#include "eii/profile.hpp"
#include "eii/rs_code.hpp"
#include "eii/sim.hpp"

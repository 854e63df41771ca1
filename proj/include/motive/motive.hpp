#pragma once

// Umbrella header for the motive-forge library.

#include "motive/cellular.hpp"
#include "motive/checked.hpp"
#include "motive/configurations.hpp"
#include "motive/errors.hpp"
#include "motive/flags.hpp"
#include "motive/gbundle.hpp"
#include "motive/int_matrix.hpp"
#include "motive/json_io.hpp"
#include "motive/l_polynomial.hpp"
#include "motive/root_system.hpp"
#include "motive/tate_sum.hpp"
#include "motive/weyl.hpp"
#include "motive/wonderful.hpp"

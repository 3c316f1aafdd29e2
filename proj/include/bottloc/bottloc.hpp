#pragma once

// Umbrella header: exact localization sums from circle-action fixed-point data.

#include "bottloc/rational.hpp"
#include "bottloc/laurent.hpp"
#include "bottloc/rational_function.hpp"
#include "bottloc/profile.hpp"
#include "bottloc/symmetric.hpp"
#include "bottloc/localize.hpp"
#include "bottloc/injectivity.hpp"
#include "bottloc/generators.hpp"
#include "bottloc/genus.hpp"
#include "bottloc/search.hpp"
#include "bottloc/json_io.hpp"

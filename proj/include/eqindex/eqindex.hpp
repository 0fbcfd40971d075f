#pragma once

#include "eqindex/action.hpp"
#include "eqindex/apps.hpp"
#include "eqindex/arithgroup.hpp"
#include "eqindex/circulant.hpp"
#include "eqindex/cyclo.hpp"
#include "eqindex/indexcore.hpp"
#include "eqindex/linalg.hpp"
#include "eqindex/rational.hpp"
#include "eqindex/reptheory.hpp"

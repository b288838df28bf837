#pragma once

#include "tropelim/error.hpp"
#include "tropelim/exact.hpp"
#include "tropelim/polytope.hpp"
#include "tropelim/fan.hpp"
#include "tropelim/tropical.hpp"
#include "tropelim/eliminate.hpp"
#include "tropelim/implicit.hpp"
#include "tropelim/newton.hpp"

#pragma once

#include "fbvp/core.hpp"
#include "fbvp/integrator.hpp"
#include "fbvp/event_locator.hpp"
#include "fbvp/solver.hpp"
#include "fbvp/problems.hpp"
#include "fbvp/convergence.hpp"
#include "fbvp/table.hpp"

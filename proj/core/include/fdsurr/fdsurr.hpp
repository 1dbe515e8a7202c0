#pragma once

#include "fdsurr/accelerated_solver.hpp"
#include "fdsurr/base_solver.hpp"
#include "fdsurr/complexity.hpp"
#include "fdsurr/config.hpp"
#include "fdsurr/dataset.hpp"
#include "fdsurr/errors.hpp"
#include "fdsurr/experiment.hpp"
#include "fdsurr/finite_difference.hpp"
#include "fdsurr/lbfgs.hpp"
#include "fdsurr/nn_model.hpp"
#include "fdsurr/oracle.hpp"
#include "fdsurr/problems.hpp"
#include "fdsurr/profiles.hpp"
#include "fdsurr/rbf_model.hpp"
#include "fdsurr/surrogate.hpp"
#include "fdsurr/surrogate_step.hpp"
#include "fdsurr/trace.hpp"

// Copyright 2026 the qsim developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "qsim/basis.hpp"
#include "qsim/density_operator.hpp"
#include "qsim/errors.hpp"
#include "qsim/evolution.hpp"
#include "qsim/integrator.hpp"
#include "qsim/master.hpp"
#include "qsim/mcwf.hpp"
#include "qsim/operator.hpp"
#include "qsim/schroedinger.hpp"
#include "qsim/semiclassical.hpp"
#include "qsim/state.hpp"
#include "qsim/types.hpp"

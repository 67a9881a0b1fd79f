#pragma once

#include "ialign/channel.hpp"
#include "ialign/closed_form.hpp"
#include "ialign/cpso.hpp"
#include "ialign/errors.hpp"
#include "ialign/objective.hpp"
#include "ialign/packing.hpp"
#include "ialign/problem.hpp"
#include "ialign/pso.hpp"
#include "ialign/rng.hpp"
#include "ialign/types.hpp"

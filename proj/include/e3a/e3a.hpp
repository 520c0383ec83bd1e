#pragma once

#include "core.hpp"
#include "rng.hpp"
#include "dominance.hpp"
#include "scalarization.hpp"
#include "normalization.hpp"
#include "selection.hpp"
#include "metrics.hpp"
#include "problems.hpp"
#include "variation.hpp"
#include "algorithm.hpp"

#pragma once

#include "harness/config.hpp"
#include "harness/records.hpp"
#include "harness/stats.hpp"
#include "harness/campaign.hpp"

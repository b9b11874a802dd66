#pragma once

#include "lorenz/braids.hpp"
#include "lorenz/error.hpp"
#include "lorenz/families.hpp"
#include "lorenz/farey.hpp"
#include "lorenz/sampling.hpp"
#include "lorenz/starprod.hpp"
#include "lorenz/words.hpp"

#pragma once

// Umbrella header.

#include "tokuyama/characters.hpp"
#include "tokuyama/core.hpp"
#include "tokuyama/crystal.hpp"
#include "tokuyama/laurent.hpp"
#include "tokuyama/serialize.hpp"
#include "tokuyama/statistics.hpp"

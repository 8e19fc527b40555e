#pragma once

// Umbrella header pulling in the whole public surface.

#include "braidmat/braid.hpp"
#include "braidmat/error.hpp"
#include "braidmat/formations.hpp"
#include "braidmat/io.hpp"
#include "braidmat/ladder.hpp"
#include "braidmat/matrix.hpp"
#include "braidmat/matrix_kit.hpp"
#include "braidmat/realizer.hpp"
#include "braidmat/tstructure.hpp"

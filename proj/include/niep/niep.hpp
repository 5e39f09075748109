#pragma once

#include "niep/core.hpp"
#include "niep/differentiator.hpp"
#include "niep/harness.hpp"
#include "niep/matrix.hpp"
#include "niep/moments.hpp"
#include "niep/polynomial.hpp"
#include "niep/random.hpp"
#include "niep/realizers.hpp"
#include "niep/spectrum.hpp"

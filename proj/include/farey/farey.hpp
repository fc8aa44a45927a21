#pragma once

// Umbrella header for the library (the CLI layer lives in cli.hpp).

#include "classic.hpp"
#include "committee.hpp"
#include "counting.hpp"
#include "numeric.hpp"
#include "polynomial.hpp"
#include "subsequence.hpp"

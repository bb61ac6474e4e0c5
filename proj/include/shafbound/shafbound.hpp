#pragma once

// Umbrella header: exact rational polynomial arithmetic, Gotzmann
// decompositions and length bounds, Hilbert coefficient bounds, tiered
// huge-number arithmetic and the effective-constant pipeline.

#include "shafbound/bounds.hpp"
#include "shafbound/gotzmann.hpp"
#include "shafbound/hilbert.hpp"
#include "shafbound/json_io.hpp"
#include "shafbound/magnitude.hpp"
#include "shafbound/rational.hpp"
#include "shafbound/ratpoly.hpp"
#include "shafbound/real.hpp"

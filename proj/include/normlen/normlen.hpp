#pragma once

#include "normlen/lattice.hpp"
#include "normlen/ideals.hpp"
#include "normlen/torsion_modules.hpp"
#include "normlen/length.hpp"
#include "normlen/frobval.hpp"
#include "normlen/splinter.hpp"
#include "normlen/dsl.hpp"
#include "normlen/verify.hpp"

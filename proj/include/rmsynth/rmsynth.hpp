/*!
  \file rmsynth.hpp
  \brief Includes the whole library
*/

#pragma once

#include "circuit.hpp"
#include "cost.hpp"
#include "errors.hpp"
#include "factorize.hpp"
#include "index_set.hpp"
#include "io.hpp"
#include "netlist.hpp"
#include "pprm.hpp"
#include "synthesis.hpp"
#include "truth_table.hpp"
#include "verify.hpp"

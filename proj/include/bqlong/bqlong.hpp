#pragma once

#include "bqlong/biquandle.hpp"
#include "bqlong/coloring.hpp"
#include "bqlong/errors.hpp"
#include "bqlong/finite_group.hpp"
#include "bqlong/gauss_code.hpp"
#include "bqlong/harness.hpp"
#include "bqlong/identities.hpp"
#include "bqlong/longitude.hpp"
#include "bqlong/moves.hpp"
#include "bqlong/parallel.hpp"
#include "bqlong/permutation.hpp"
#include "bqlong/table_io.hpp"

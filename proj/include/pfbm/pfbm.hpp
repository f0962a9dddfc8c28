#pragma once

#include "pfbm/errors.hpp"
#include "pfbm/extended_real.hpp"
#include "pfbm/tnorm.hpp"
#include "pfbm/pfn.hpp"
#include "pfbm/operations.hpp"
#include "pfbm/bonferroni.hpp"
#include "pfbm/mcdm.hpp"
#include "pfbm/io.hpp"
#include "pfbm/golden.hpp"

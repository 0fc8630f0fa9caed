#pragma once

#include "rankmetric/bounds.hpp"
#include "rankmetric/codes.hpp"
#include "rankmetric/enumerative.hpp"
#include "rankmetric/error.hpp"
#include "rankmetric/finite_field.hpp"
#include "rankmetric/qmatrix.hpp"
#include "rankmetric/randomized.hpp"
#include "rankmetric/rank_metric.hpp"
#include "rankmetric/report.hpp"
#include "rankmetric/rng.hpp"

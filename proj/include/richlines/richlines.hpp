#pragma once

// Umbrella header.

#include "richlines/bigfloat.hpp"
#include "richlines/corpus.hpp"
#include "richlines/errors.hpp"
#include "richlines/grid.hpp"
#include "richlines/incidence.hpp"
#include "richlines/io.hpp"
#include "richlines/line.hpp"
#include "richlines/measure.hpp"
#include "richlines/number_set.hpp"
#include "richlines/report.hpp"
#include "richlines/rich_family.hpp"
#include "richlines/scalar.hpp"

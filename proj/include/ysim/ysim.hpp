#pragma once

#include "ysim/binning.hpp"
#include "ysim/corpus.hpp"
#include "ysim/csv.hpp"
#include "ysim/errors.hpp"
#include "ysim/hindex.hpp"
#include "ysim/impact.hpp"
#include "ysim/io.hpp"
#include "ysim/regression.hpp"
#include "ysim/report.hpp"
#include "ysim/rng.hpp"
#include "ysim/simon.hpp"
#include "ysim/special.hpp"
#include "ysim/tailslope.hpp"
#include "ysim/yule.hpp"

#pragma once

#include "airy_zeros.hpp"
#include "conformal_map.hpp"
#include "error.hpp"
#include "jet.hpp"
#include "lg_coefficients.hpp"
#include "oracle.hpp"
#include "parallel.hpp"
#include "params.hpp"
#include "poly_eval.hpp"
#include "sweep.hpp"
#include "trig_series.hpp"
#include "upsilon.hpp"
#include "zero_expansion.hpp"

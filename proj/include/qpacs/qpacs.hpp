#pragma once

#include "qpacs/errors.hpp"
#include "qpacs/figures.hpp"
#include "qpacs/golden.hpp"
#include "qpacs/moments.hpp"
#include "qpacs/operator_words.hpp"
#include "qpacs/oracle.hpp"
#include "qpacs/photon_stats.hpp"
#include "qpacs/qalgebra.hpp"
#include "qpacs/qpolynomial.hpp"
#include "qpacs/squeezing.hpp"
#include "qpacs/states.hpp"
#include "qpacs/sweep.hpp"

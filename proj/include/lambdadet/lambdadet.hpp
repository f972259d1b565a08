#ifndef LAMBDADET_LAMBDADET_HPP
#define LAMBDADET_LAMBDADET_HPP

#include "lambdadet/asm.hpp"
#include "lambdadet/aztec_graph.hpp"
#include "lambdadet/bigrat.hpp"
#include "lambdadet/condense.hpp"
#include "lambdadet/error.hpp"
#include "lambdadet/laurent_poly.hpp"
#include "lambdadet/matrix.hpp"
#include "lambdadet/tilings.hpp"

#endif // LAMBDADET_LAMBDADET_HPP

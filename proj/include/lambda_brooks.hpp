#pragma once

#include "lambda_brooks/color_or_block.hpp"
#include "lambda_brooks/coloring.hpp"
#include "lambda_brooks/connectivity.hpp"
#include "lambda_brooks/errors.hpp"
#include "lambda_brooks/generate.hpp"
#include "lambda_brooks/graph.hpp"
#include "lambda_brooks/hajos.hpp"
#include "lambda_brooks/io.hpp"
#include "lambda_brooks/matching.hpp"
#include "lambda_brooks/prng.hpp"
#include "lambda_brooks/serialize.hpp"

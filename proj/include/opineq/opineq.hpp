#pragma once

#include "opineq/calculus.hpp"
#include "opineq/cases.hpp"
#include "opineq/error.hpp"
#include "opineq/functions.hpp"
#include "opineq/gamma.hpp"
#include "opineq/harness.hpp"
#include "opineq/linalg.hpp"
#include "opineq/matrix.hpp"
#include "opineq/matrix_json.hpp"
#include "opineq/norms.hpp"
#include "opineq/random.hpp"

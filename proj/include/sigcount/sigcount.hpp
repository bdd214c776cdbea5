#pragma once

#include "sigcount/count.hpp"
#include "sigcount/groebner.hpp"
#include "sigcount/matrix.hpp"
#include "sigcount/oracle.hpp"
#include "sigcount/parse.hpp"
#include "sigcount/polynomial.hpp"
#include "sigcount/quadform.hpp"
#include "sigcount/rational.hpp"
#include "sigcount/shape.hpp"
#include "sigcount/traceform.hpp"
#include "sigcount/univariate.hpp"

#pragma once

#include "relsig/binomial.hpp"
#include "relsig/convert.hpp"
#include "relsig/dependent.hpp"
#include "relsig/dual.hpp"
#include "relsig/errors.hpp"
#include "relsig/io.hpp"
#include "relsig/oracle.hpp"
#include "relsig/polynomial.hpp"
#include "relsig/polyroute.hpp"
#include "relsig/rational.hpp"
#include "relsig/structure.hpp"
#include "relsig/vectors.hpp"

#pragma once

#include "nakayama/algebra.hpp"
#include "nakayama/enumerate.hpp"
#include "nakayama/error.hpp"
#include "nakayama/homological.hpp"
#include "nakayama/laurent.hpp"
#include "nakayama/magnitude.hpp"
#include "nakayama/matrix.hpp"
#include "nakayama/quiver.hpp"
#include "nakayama/ratfunc.hpp"
#include "nakayama/rational.hpp"
#include "nakayama/reduction.hpp"
#include "nakayama/report.hpp"
#include "nakayama/verify.hpp"

#ifndef QUATSPLIT_QUATSPLIT_HPP
#define QUATSPLIT_QUATSPLIT_HPP

#include "arith.hpp"
#include "classify.hpp"
#include "cyclotomic.hpp"
#include "error.hpp"
#include "field.hpp"
#include "hilbert.hpp"
#include "oracle.hpp"
#include "quadratic.hpp"
#include "report.hpp"
#include "verdict.hpp"

#endif

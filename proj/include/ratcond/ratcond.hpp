#pragma once

#include "ratcond/exact/combinatorics.hpp"
#include "ratcond/exact/constants.hpp"
#include "ratcond/exact/gauss.hpp"
#include "ratcond/exact/integer.hpp"
#include "ratcond/exact/interval.hpp"
#include "ratcond/exact/number_theory.hpp"
#include "ratcond/exact/univariate.hpp"
#include "ratcond/heights.hpp"
#include "ratcond/linear/conditioning.hpp"
#include "ratcond/linear/matrix.hpp"
#include "ratcond/polysys/binary_forms.hpp"
#include "ratcond/polysys/condition.hpp"
#include "ratcond/polysys/system.hpp"
#include "ratcond/polysys/unitary.hpp"
#include "ratcond/polysys/zeros.hpp"
#include "ratcond/census/census.hpp"
#include "ratcond/census/counting.hpp"
#include "ratcond/census/davenport.hpp"
#include "ratcond/newton/affine.hpp"
#include "ratcond/newton/gamma.hpp"
#include "ratcond/newton/precision.hpp"

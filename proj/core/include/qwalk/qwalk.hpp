#pragma once

#include "qwalk/fourier.hpp"
#include "qwalk/harness.hpp"
#include "qwalk/limit_law.hpp"
#include "qwalk/matrix2.hpp"
#include "qwalk/quadrature.hpp"
#include "qwalk/types.hpp"
#include "qwalk/walk.hpp"

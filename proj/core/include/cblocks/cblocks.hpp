#pragma once

#include "cblocks/degrees.hpp"
#include "cblocks/errors.hpp"
#include "cblocks/fcurve.hpp"
#include "cblocks/fusion.hpp"
#include "cblocks/intersection.hpp"
#include "cblocks/linalg.hpp"
#include "cblocks/numeric.hpp"
#include "cblocks/props.hpp"
#include "cblocks/version.hpp"
#include "cblocks/weights.hpp"

#pragma once

#include "geodesics/collar.hpp"
#include "geodesics/errors.hpp"
#include "geodesics/hyp2.hpp"
#include "geodesics/intersections.hpp"
#include "geodesics/pants.hpp"
#include "geodesics/report.hpp"
#include "geodesics/spectrum.hpp"
#include "geodesics/suite.hpp"
#include "geodesics/verifier.hpp"
#include "geodesics/winding.hpp"
#include "geodesics/words.hpp"

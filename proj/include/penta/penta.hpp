#pragma once

#include "penta/cyclotomic.hpp"
#include "penta/golden.hpp"
#include "penta/io.hpp"
#include "penta/model_set.hpp"
#include "penta/rational.hpp"
#include "penta/svg.hpp"
#include "penta/units.hpp"
#include "penta/verify.hpp"
#include "penta/version.hpp"

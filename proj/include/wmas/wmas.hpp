#pragma once

#include "bigint.hpp"
#include "certify.hpp"
#include "combinat.hpp"
#include "dispersion.hpp"
#include "eigen.hpp"
#include "family.hpp"
#include "mdistance.hpp"
#include "scheme.hpp"

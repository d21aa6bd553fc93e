#pragma once

#include "convcode/error.hpp"
#include "convcode/galois.hpp"
#include "convcode/poly.hpp"
#include "convcode/matrix.hpp"
#include "convcode/polyalg.hpp"
#include "convcode/encoder.hpp"
#include "convcode/statediag.hpp"
#include "convcode/weight_enum.hpp"
#include "convcode/spectrum.hpp"
#include "convcode/invariance.hpp"
#include "convcode/oracle.hpp"
#include "convcode/gm_format.hpp"

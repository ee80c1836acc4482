#pragma once

#include "lozenge/bigint.hpp"
#include "lozenge/closedforms.hpp"
#include "lozenge/counting.hpp"
#include "lozenge/geometry.hpp"
#include "lozenge/inclusion_exclusion.hpp"
#include "lozenge/io.hpp"
#include "lozenge/polyedges.hpp"
#include "lozenge/reference.hpp"
#include "lozenge/verify.hpp"

#pragma once

#include "brauer/errors.hpp"
#include "brauer/field.hpp"
#include "brauer/linalg.hpp"
#include "brauer/graph.hpp"
#include "brauer/quiver.hpp"
#include "brauer/path.hpp"
#include "brauer/presentation.hpp"
#include "brauer/algebra.hpp"
#include "brauer/complex.hpp"
#include "brauer/homotopy.hpp"
#include "brauer/tilting.hpp"
#include "brauer/reduction.hpp"
#include "brauer/report.hpp"

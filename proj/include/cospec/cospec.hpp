#pragma once

#include "cospec/canonical.hpp"
#include "cospec/census.hpp"
#include "cospec/charpoly.hpp"
#include "cospec/enumerate.hpp"
#include "cospec/graph.hpp"
#include "cospec/graph6.hpp"
#include "cospec/integer.hpp"
#include "cospec/invariants.hpp"
#include "cospec/matrices.hpp"
#include "cospec/matrix.hpp"
#include "cospec/minors.hpp"
#include "cospec/report.hpp"
#include "cospec/snf.hpp"
#include "cospec/stream.hpp"
#include "cospec/theorems.hpp"

namespace cospec {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace cospec

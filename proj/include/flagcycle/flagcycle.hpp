#pragma once

#include "flagcycle/conditions.hpp"
#include "flagcycle/enumerate.hpp"
#include "flagcycle/error.hpp"
#include "flagcycle/exactnum.hpp"
#include "flagcycle/flags.hpp"
#include "flagcycle/geometry.hpp"
#include "flagcycle/intersect.hpp"
#include "flagcycle/oracle.hpp"
#include "flagcycle/parallel.hpp"
#include "flagcycle/perm.hpp"

#pragma once

#include "stacksort/permutation.hpp"
#include "stacksort/machine.hpp"
#include "stacksort/structure.hpp"
#include "stacksort/dynamics.hpp"
#include "stacksort/families.hpp"
#include "stacksort/report.hpp"
#include "stacksort/checkers.hpp"

#pragma once

#include "sepcount/arith.hpp"
#include "sepcount/composition.hpp"
#include "sepcount/count_table.hpp"
#include "sepcount/error.hpp"
#include "sepcount/initial_values.hpp"
#include "sepcount/ncycle.hpp"
#include "sepcount/oracle.hpp"
#include "sepcount/partition.hpp"
#include "sepcount/permutation.hpp"
#include "sepcount/plane_permutation.hpp"
#include "sepcount/recurrence.hpp"
#include "sepcount/stirling.hpp"

#pragma once

#include "pomat/error.hpp"
#include "pomat/greedy.hpp"
#include "pomat/independence.hpp"
#include "pomat/poset.hpp"
#include "pomat/rational.hpp"
#include "pomat/simplicial.hpp"
#include "pomat/subset.hpp"
#include "pomat/verify.hpp"

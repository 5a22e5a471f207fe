#pragma once

#include "ncposet/bitset.hpp"
#include "ncposet/builders.hpp"
#include "ncposet/counting.hpp"
#include "ncposet/io.hpp"
#include "ncposet/labeling.hpp"
#include "ncposet/nbb.hpp"
#include "ncposet/parking.hpp"
#include "ncposet/partition.hpp"
#include "ncposet/poset.hpp"

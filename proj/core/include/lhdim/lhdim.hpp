#pragma once

#include "lhdim/datagen.hpp"
#include "lhdim/geometry.hpp"
#include "lhdim/homology.hpp"
#include "lhdim/local_pair.hpp"
#include "lhdim/pipeline.hpp"
#include "lhdim/point_cloud.hpp"
#include "lhdim/rips.hpp"
#include "lhdim/schedule.hpp"

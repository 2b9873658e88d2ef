#pragma once

#include "pants/agol_path.hpp"
#include "pants/carried_surfaces.hpp"
#include "pants/drilling.hpp"
#include "pants/io.hpp"
#include "pants/pants_graph.hpp"
#include "pants/pipeline.hpp"
#include "pants/surface_model.hpp"
#include "pants/triangulation.hpp"

#pragma once

#include <qgl/analysis.hpp>
#include <qgl/canonical.hpp>
#include <qgl/config.hpp>
#include <qgl/dataset.hpp>
#include <qgl/enumerate.hpp>
#include <qgl/error.hpp>
#include <qgl/families.hpp>
#include <qgl/graph.hpp>
#include <qgl/graph6.hpp>
#include <qgl/parallel.hpp>
#include <qgl/pipeline.hpp>
#include <qgl/qaoa/maxcut.hpp>
#include <qgl/qaoa/metrics.hpp>
#include <qgl/qaoa/optimize.hpp>
#include <qgl/qaoa/simulator.hpp>
#include <qgl/record.hpp>
#include <qgl/structure.hpp>
#include <qgl/symmetry.hpp>

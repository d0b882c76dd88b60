#pragma once

#include "tiltq/exactlin.hpp"
#include "tiltq/quiver.hpp"
#include "tiltq/rep.hpp"
#include "tiltq/approx.hpp"
#include "tiltq/graph.hpp"
#include "tiltq/tilting.hpp"
#include "tiltq/triple.hpp"
#include "tiltq/dup.hpp"
#include "tiltq/endo.hpp"
#include "tiltq/tilted.hpp"
#include "tiltq/report.hpp"
#include "tiltq/cli.hpp"

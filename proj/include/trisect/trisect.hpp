#pragma once

#include "trisect/calculus.hpp"
#include "trisect/diagram.hpp"
#include "trisect/diagram_io.hpp"
#include "trisect/error.hpp"
#include "trisect/farey.hpp"
#include "trisect/fraction.hpp"
#include "trisect/invariants.hpp"
#include "trisect/ribbon_graph.hpp"
#include "trisect/slides.hpp"
#include "trisect/surgery.hpp"
#include "trisect/zmatrix.hpp"

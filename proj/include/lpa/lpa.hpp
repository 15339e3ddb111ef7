#pragma once

#include "lpa/algebra.hpp"
#include "lpa/element_parser.hpp"
#include "lpa/epsilon.hpp"
#include "lpa/frobenius.hpp"
#include "lpa/graph.hpp"
#include "lpa/graph_dsl.hpp"
#include "lpa/grading.hpp"
#include "lpa/group.hpp"
#include "lpa/report.hpp"
#include "lpa/ring.hpp"
#include "lpa/sampling.hpp"
